#pragma once

#include "homkit/complexes.hpp"

#include <regex>
#include <string>

namespace homkit {

/// A decidable class of modules, closed under isomorphism.
class XClassSpec {
public:
  enum class Kind { All, ZeroOnly, Free, AnnihilatedBy, FactorPredicate };

  static auto all() -> XClassSpec { return XClassSpec(Kind::All); }
  static auto zero_only() -> XClassSpec { return XClassSpec(Kind::ZeroOnly); }
  static auto free() -> XClassSpec { return XClassSpec(Kind::Free); }
  static auto annihilated_by(const Integer &p) -> XClassSpec {
    if (p <= 0) throw std::invalid_argument("ann: needs a positive integer");
    XClassSpec x(Kind::AnnihilatedBy);
    x.param_ = p;
    return x;
  }
  /// Members are the modules whose factor list, written "d1,d2,...", fully
  /// matches the pattern. The zero module is decided by zero_member.
  static auto predicate(const std::string &pattern, bool zero_member = true) -> XClassSpec {
    XClassSpec x(Kind::FactorPredicate);
    x.pattern_ = pattern;
    x.re_ = std::regex(pattern);
    x.zero_member_ = zero_member;
    return x;
  }

  /// Accepts all, zero, free, ann:p, pred:<regex> and pred0:<regex> (the
  /// latter excludes the zero module).
  static auto parse(const std::string &s) -> XClassSpec {
    if (s == "all") return all();
    if (s == "zero") return zero_only();
    if (s == "free") return free();
    try {
      if (s.rfind("ann:", 0) == 0) return annihilated_by(Integer(s.substr(4)));
      if (s.rfind("pred:", 0) == 0) return predicate(s.substr(5), true);
      if (s.rfind("pred0:", 0) == 0) return predicate(s.substr(6), false);
    } catch (const std::regex_error &e) {
      throw std::invalid_argument("bad class pattern: " + std::string(e.what()));
    }
    throw std::invalid_argument("unknown class spec '" + s + "'");
  }

  [[nodiscard]] auto kind() const -> Kind { return kind_; }

  [[nodiscard]] auto to_string() const -> std::string {
    switch (kind_) {
    case Kind::All: return "all";
    case Kind::ZeroOnly: return "zero";
    case Kind::Free: return "free";
    case Kind::AnnihilatedBy: return "ann:" + param_.get_str();
    case Kind::FactorPredicate: return (zero_member_ ? "pred:" : "pred0:") + pattern_;
    }
    return "";
  }

  [[nodiscard]] auto contains(const FpModule &m) const -> bool {
    switch (kind_) {
    case Kind::All: return true;
    case Kind::ZeroOnly: return m.is_zero();
    case Kind::Free:
      for (const auto &d : m.factors())
        if (d != m.ring().free_factor()) return false;
      return true;
    case Kind::AnnihilatedBy:
      for (const auto &d : m.factors())
        if (d == 0 || !divides(d, param_)) return false;
      return true;
    case Kind::FactorPredicate: {
      if (m.is_zero()) return zero_member_;
      std::string s;
      for (std::size_t i = 0; i < m.rank(); ++i) s += (i ? "," : "") + m.factor(i).get_str();
      return std::regex_match(s, re_);
    }
    }
    return false;
  }

  friend auto operator==(const XClassSpec &a, const XClassSpec &b) -> bool { return a.to_string() == b.to_string(); }

private:
  explicit XClassSpec(Kind k) : kind_(k) {}
  Kind kind_;
  Integer param_ = 0;
  std::string pattern_;
  std::regex re_;
  bool zero_member_ = true;
};

inline auto contains_module(const XClassSpec &x, const FpModule &m) -> bool { return x.contains(m); }

inline auto contains_complex(const XClassSpec &x, const Complex &c) -> bool {
  for (int k = c.lo(); k <= c.hi(); ++k)
    if (!x.contains(c.component(k))) return false;
  return true;
}

} // namespace homkit
