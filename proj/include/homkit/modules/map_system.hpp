#pragma once

#include "homkit/modules/fp_module.hpp"

#include <map>
#include <optional>
#include <vector>

namespace homkit {

/// Linear equations whose unknowns are module homomorphisms. Each equation
/// states sum_t c_t * L_t X_t R_t = rhs as maps between two fixed modules.
class MapSystem {
public:
  struct Unknown {
    std::size_t id = 0;
  };
  struct Term {
    Unknown x;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
    Integer coeff = 1;
  };

  explicit MapSystem(RingSpec ring) : ring_(ring), sys_(ring) {}

  auto add_unknown(const FpModule &source, const FpModule &target) -> Unknown {
    Slot s{source, target, sys_.variable_count()};
    for (std::size_t i = 0; i < target.rank(); ++i)
      for (std::size_t j = 0; j < source.rank(); ++j) sys_.add_variable(target.factor(i));
    for (std::size_t j = 0; j < source.rank(); ++j)
      for (std::size_t i = 0; i < target.rank(); ++i) {
        const Integer &d = source.factor(j), &e = target.factor(i);
        bool trivial = e == 0 ? d == 0 : divides(e, d);
        if (!trivial) sys_.add_equation({{var(s, i, j), d}}, 0, e);
      }
    slots_.push_back(std::move(s));
    return {slots_.size() - 1};
  }

  void add_equation(const FpModule &source, const FpModule &target, const std::vector<Term> &terms,
                    const IntMatrix &rhs) {
    if (rhs.rows() != target.rank() || rhs.cols() != source.rank())
      throw std::invalid_argument("equation right-hand side has the wrong shape");
    for (std::size_t i = 0; i < target.rank(); ++i)
      for (std::size_t j = 0; j < source.rank(); ++j) {
        std::map<std::size_t, Integer> coeffs;
        for (const auto &t : terms) {
          const Slot &s = slots_.at(t.x.id);
          std::size_t ra = s.target.rank(), cb = s.source.rank();
          if (t.left && (t.left->rows() != target.rank() || t.left->cols() != ra))
            throw std::invalid_argument("left factor has the wrong shape");
          if (t.right && (t.right->rows() != cb || t.right->cols() != source.rank()))
            throw std::invalid_argument("right factor has the wrong shape");
          if (!t.left && ra != target.rank()) throw std::invalid_argument("unknown target mismatch");
          if (!t.right && cb != source.rank()) throw std::invalid_argument("unknown source mismatch");
          for (std::size_t a = 0; a < ra; ++a) {
            Integer l = t.left ? (*t.left)(i, a) : Integer(a == i ? 1 : 0);
            if (l == 0) continue;
            for (std::size_t b = 0; b < cb; ++b) {
              Integer r = t.right ? (*t.right)(b, j) : Integer(b == j ? 1 : 0);
              if (r == 0) continue;
              coeffs[var(s, a, b)] += t.coeff * l * r;
            }
          }
        }
        std::vector<std::pair<std::size_t, Integer>> row(coeffs.begin(), coeffs.end());
        sys_.add_equation(std::move(row), rhs(i, j), target.factor(i));
      }
  }

  [[nodiscard]] auto unknown_count() const -> std::size_t { return slots_.size(); }
  [[nodiscard]] auto system() const -> const LinearSystem & { return sys_; }

  [[nodiscard]] auto maps_of(const Vector &x) const -> std::vector<ModuleMap> {
    std::vector<ModuleMap> out;
    for (const auto &s : slots_) {
      IntMatrix m(s.target.rank(), s.source.rank());
      for (std::size_t i = 0; i < s.target.rank(); ++i)
        for (std::size_t j = 0; j < s.source.rank(); ++j) m(i, j) = x[var(s, i, j)];
      out.push_back(ModuleMap::trusted(s.source, s.target, m));
    }
    return out;
  }

  [[nodiscard]] auto solve() const -> std::optional<std::vector<ModuleMap>> {
    auto s = sys_.solve();
    if (!s) return std::nullopt;
    return maps_of(s->particular);
  }

  [[nodiscard]] auto kernel() const -> std::vector<std::vector<ModuleMap>> {
    std::vector<std::vector<ModuleMap>> out;
    for (const auto &k : sys_.kernel()) out.push_back(maps_of(k));
    return out;
  }

private:
  struct Slot {
    FpModule source, target;
    std::size_t offset;
  };
  static auto var(const Slot &s, std::size_t i, std::size_t j) -> std::size_t {
    return s.offset + i * s.source.rank() + j;
  }

  RingSpec ring_;
  LinearSystem sys_;
  std::vector<Slot> slots_;
};

} // namespace homkit
