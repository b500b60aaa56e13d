#pragma once

#include "homkit/modules.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace homkit {

/// A bounded cochain complex. Zero components at either end are trimmed so
/// that lo() and hi() are the outermost nonzero degrees.
class Complex {
public:
  Complex() = default;
  explicit Complex(RingSpec ring) : ring_(ring) {}

  /// Components c^lo, ..., c^{lo+n-1} and differentials d^lo, ..., d^{lo+n-2}.
  /// Shapes are checked; d∘d = 0 is not (see validate).
  Complex(RingSpec ring, int lo, std::vector<FpModule> components, std::vector<ModuleMap> differentials)
      : ring_(ring), lo_(lo), comps_(std::move(components)), diffs_(std::move(differentials)) {
    if (comps_.empty() ? !diffs_.empty() : diffs_.size() + 1 != comps_.size())
      throw std::invalid_argument("complex needs one differential between consecutive components");
    for (const auto &m : comps_)
      if (!(m.ring() == ring_)) throw std::invalid_argument("complex component over the wrong ring");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (!(diffs_[k].source() == comps_[k]) || !(diffs_[k].target() == comps_[k + 1]))
        throw std::invalid_argument("differential does not match its components");
    trim();
  }

  /// Builds from sparse degree maps; differentials are given as matrices and
  /// checked for well-definedness. Missing differentials are zero.
  static auto from_maps(RingSpec ring, const std::map<int, FpModule> &comps, const std::map<int, IntMatrix> &diffs)
      -> Complex {
    if (comps.empty()) {
      for (const auto &[k, m] : diffs)
        if (!m.is_zero()) throw std::invalid_argument("nonzero differential on a zero complex");
      return Complex(ring);
    }
    int lo = comps.begin()->first, hi = comps.rbegin()->first;
    auto at = [&](int k) { auto it = comps.find(k); return it == comps.end() ? FpModule::zero(ring) : it->second; };
    std::vector<FpModule> cs;
    for (int k = lo; k <= hi; ++k) cs.push_back(at(k));
    std::vector<ModuleMap> ds;
    for (int k = lo; k < hi; ++k) {
      auto it = diffs.find(k);
      if (it == diffs.end()) ds.push_back(ModuleMap::zero(at(k), at(k + 1)));
      else ds.emplace_back(at(k), at(k + 1), it->second);
    }
    for (const auto &[k, m] : diffs)
      if ((k < lo || k >= hi) && !m.is_zero()) throw std::invalid_argument("differential outside the support");
    return Complex(ring, lo, std::move(cs), std::move(ds));
  }

  [[nodiscard]] auto ring() const -> const RingSpec & { return ring_; }
  [[nodiscard]] auto is_zero() const -> bool { return comps_.empty(); }
  [[nodiscard]] auto lo() const -> int { return lo_; }
  [[nodiscard]] auto hi() const -> int { return lo_ + static_cast<int>(comps_.size()) - 1; }
  [[nodiscard]] auto width() const -> int { return static_cast<int>(comps_.size()); }

  [[nodiscard]] auto component(int k) const -> FpModule {
    if (is_zero() || k < lo_ || k > hi()) return FpModule::zero(ring_);
    return comps_[static_cast<std::size_t>(k - lo_)];
  }
  [[nodiscard]] auto differential(int k) const -> ModuleMap {
    if (is_zero() || k < lo_ || k >= hi()) return ModuleMap::zero(component(k), component(k + 1));
    return diffs_[static_cast<std::size_t>(k - lo_)];
  }

  /// Sum of the component cardinalities (finite complexes only).
  [[nodiscard]] auto total_size() const -> std::uint64_t {
    std::uint64_t s = 0;
    for (const auto &m : comps_) s += m.size();
    return s;
  }
  [[nodiscard]] auto is_finite() const -> bool {
    for (const auto &m : comps_)
      if (!m.is_finite()) return false;
    return true;
  }

  [[nodiscard]] auto to_string() const -> std::string {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int k = lo(); k <= hi(); ++k) {
      os << "[" << k << "] " << component(k).to_string();
      if (k < hi()) os << " --" << differential(k).matrix() << "--> ";
    }
    return os.str();
  }

  friend auto operator==(const Complex &a, const Complex &b) -> bool {
    if (!(a.ring_ == b.ring_) || a.comps_.size() != b.comps_.size()) return false;
    if (a.is_zero()) return true;
    return a.lo_ == b.lo_ && a.comps_ == b.comps_ && a.diffs_ == b.diffs_;
  }

private:
  void trim() {
    std::size_t front = 0, back = comps_.size();
    while (front < back && comps_[front].is_zero()) ++front;
    while (back > front && comps_[back - 1].is_zero()) --back;
    if (front == back) {
      comps_.clear();
      diffs_.clear();
      lo_ = 0;
      return;
    }
    comps_ = {comps_.begin() + static_cast<long>(front), comps_.begin() + static_cast<long>(back)};
    diffs_ = {diffs_.begin() + static_cast<long>(front), diffs_.begin() + static_cast<long>(back - 1)};
    lo_ += static_cast<int>(front);
  }

  RingSpec ring_ = RingSpec::integers();
  int lo_ = 0;
  std::vector<FpModule> comps_;
  std::vector<ModuleMap> diffs_;
};

/// Degrees where either complex is nonzero.
inline auto joint_range(const Complex &a, const Complex &b) -> std::pair<int, int> {
  if (a.is_zero() && b.is_zero()) return {0, -1};
  if (a.is_zero()) return {b.lo(), b.hi()};
  if (b.is_zero()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

class ChainMap {
public:
  ChainMap() = default;
  /// Missing degrees are zero. Shapes are checked; commutation is not.
  ChainMap(Complex source, Complex target, const std::map<int, ModuleMap> &components)
      : source_(std::move(source)), target_(std::move(target)) {
    for (const auto &[k, f] : components) {
      if (!(f.source() == source_.component(k)) || !(f.target() == target_.component(k)))
        throw std::invalid_argument("chain map component does not match the complexes");
      if (!f.source().is_zero() && !f.target().is_zero()) comps_.emplace(k, f);
    }
  }
  static auto from_matrices(Complex source, Complex target, const std::map<int, IntMatrix> &ms) -> ChainMap {
    std::map<int, ModuleMap> c;
    for (const auto &[k, m] : ms) c.emplace(k, ModuleMap(source.component(k), target.component(k), m));
    return {std::move(source), std::move(target), c};
  }
  static auto zero(Complex source, Complex target) -> ChainMap { return {std::move(source), std::move(target), {}}; }
  static auto identity(const Complex &c) -> ChainMap {
    std::map<int, ModuleMap> m;
    for (int k = c.lo(); k <= c.hi(); ++k) m.emplace(k, ModuleMap::identity(c.component(k)));
    return {c, c, m};
  }

  [[nodiscard]] auto source() const -> const Complex & { return source_; }
  [[nodiscard]] auto target() const -> const Complex & { return target_; }
  [[nodiscard]] auto component(int k) const -> ModuleMap {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    return ModuleMap::zero(source_.component(k), target_.component(k));
  }
  [[nodiscard]] auto components() const -> const std::map<int, ModuleMap> & { return comps_; }
  [[nodiscard]] auto is_zero() const -> bool {
    for (const auto &[k, f] : comps_)
      if (!f.is_zero()) return false;
    return true;
  }

  /// First degree k where d_t^k f^k != f^{k+1} d_s^k.
  [[nodiscard]] auto first_violation() const -> std::optional<int> {
    auto [lo, hi] = joint_range(source_, target_);
    for (int k = lo - 1; k <= hi; ++k)
      if (!(target_.differential(k) * component(k) == component(k + 1) * source_.differential(k))) return k;
    return std::nullopt;
  }
  [[nodiscard]] auto is_chain_map() const -> bool { return !first_violation(); }

  friend auto operator*(const ChainMap &g, const ChainMap &f) -> ChainMap {
    if (!(g.source_ == f.target_)) throw std::invalid_argument("chain maps are not composable");
    std::map<int, ModuleMap> m;
    for (const auto &[k, fk] : f.comps_) m.emplace(k, g.component(k) * fk);
    return {f.source_, g.target_, m};
  }
  friend auto operator+(const ChainMap &a, const ChainMap &b) -> ChainMap {
    check_parallel(a, b);
    std::map<int, ModuleMap> m;
    auto [lo, hi] = joint_range(a.source_, a.target_);
    for (int k = lo; k <= hi; ++k) m.emplace(k, a.component(k) + b.component(k));
    return {a.source_, a.target_, m};
  }
  friend auto operator-(const ChainMap &a) -> ChainMap {
    std::map<int, ModuleMap> m;
    for (const auto &[k, f] : a.comps_) m.emplace(k, -f);
    return {a.source_, a.target_, m};
  }
  friend auto operator-(const ChainMap &a, const ChainMap &b) -> ChainMap { return a + (-b); }
  friend auto operator==(const ChainMap &a, const ChainMap &b) -> bool {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
    auto [lo, hi] = joint_range(a.source_, a.target_);
    for (int k = lo; k <= hi; ++k)
      if (!(a.component(k) == b.component(k))) return false;
    return true;
  }

private:
  static void check_parallel(const ChainMap &a, const ChainMap &b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw std::invalid_argument("chain maps are not parallel");
  }
  Complex source_, target_;
  std::map<int, ModuleMap> comps_;
};

/// s^k: source^k -> target^{k-1} with s^{k+1} d^k + d^{k-1} s^k = f^k.
struct Homotopy {
  ChainMap map;
  std::map<int, ModuleMap> components;

  [[nodiscard]] auto component(int k) const -> ModuleMap {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return ModuleMap::zero(map.source().component(k), map.target().component(k - 1));
  }
  /// First degree where the defining identity fails.
  [[nodiscard]] auto first_violation() const -> std::optional<int> {
    const Complex &s = map.source(), &t = map.target();
    auto [lo, hi] = joint_range(s, t);
    for (int k = lo; k <= hi; ++k) {
      auto lhs = component(k + 1) * s.differential(k) + t.differential(k - 1) * component(k);
      if (!(lhs == map.component(k))) return k;
    }
    return std::nullopt;
  }
  [[nodiscard]] auto verify() const -> bool { return !first_violation(); }
};

struct ShortExactOfComplexes {
  Complex left, middle, right;
  ChainMap inj, surj;

  /// Degreewise exactness and the chain-map conditions.
  [[nodiscard]] auto verify() const -> bool {
    if (!inj.is_chain_map() || !surj.is_chain_map()) return false;
    if (!(inj.source() == left) || !(inj.target() == middle) || !(surj.source() == middle) || !(surj.target() == right))
      return false;
    auto [lo, hi] = joint_range(left, middle);
    for (int k = std::min(lo, right.lo()); k <= std::max(hi, right.hi()); ++k) {
      ModuleMap i = inj.component(k), p = surj.component(k);
      if (!is_mono(i) || !is_epi(p) || !(p * i).is_zero()) return false;
      for (const auto &x : kernel_elements(p))
        if (!preimage(i, x)) return false;
    }
    return true;
  }
};

struct ValidationReport {
  bool valid = true;
  std::optional<int> first_violation;
  std::string message;
};

inline auto validate(const Complex &c) -> ValidationReport {
  for (int k = c.lo(); k < c.hi(); ++k) {
    if (!(c.differential(k + 1) * c.differential(k)).is_zero())
      return {false, k + 1, "d^" + std::to_string(k + 1) + " o d^" + std::to_string(k) + " != 0"};
  }
  return {true, std::nullopt, "valid"};
}

/// shifted^m = c^{m+k} with differential (-1)^k d^{m+k}.
inline auto shift(const Complex &c, int k) -> Complex {
  if (c.is_zero()) return c;
  std::vector<FpModule> cs;
  std::vector<ModuleMap> ds;
  for (int m = c.lo(); m <= c.hi(); ++m) cs.push_back(c.component(m));
  for (int m = c.lo(); m < c.hi(); ++m) ds.push_back(k % 2 == 0 ? c.differential(m) : -c.differential(m));
  return {c.ring(), c.lo() - k, std::move(cs), std::move(ds)};
}

inline auto shift(const ChainMap &f, int k) -> ChainMap {
  std::map<int, ModuleMap> m;
  for (const auto &[d, g] : f.components()) m.emplace(d - k, g);
  return {shift(f.source(), k), shift(f.target(), k), m};
}

/// m in degrees n and n+1 joined by the identity.
inline auto disk(int n, const FpModule &m) -> Complex {
  if (m.is_zero()) return Complex(m.ring());
  return {m.ring(), n, {m, m}, {ModuleMap::identity(m)}};
}

inline auto sphere(int n, const FpModule &m) -> Complex {
  if (m.is_zero()) return Complex(m.ring());
  return {m.ring(), n, {m}, {}};
}

struct ComplexSum {
  Complex complex;
  std::vector<ChainMap> injections, projections;
  /// Degreewise module sums, keyed by degree.
  std::map<int, DirectSum> sums;
};

inline auto direct_sum(const RingSpec &ring, const std::vector<Complex> &cs) -> ComplexSum {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto &c : cs) {
    if (!(c.ring() == ring)) throw std::invalid_argument("direct sum of complexes over different rings");
    if (c.is_zero()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
  ComplexSum out;
  std::map<int, FpModule> comps;
  for (int k = lo; k <= hi; ++k) {
    std::vector<FpModule> ms;
    for (const auto &c : cs) ms.push_back(c.component(k));
    out.sums.emplace(k, direct_sum(ring, ms));
    comps.emplace(k, out.sums.at(k).module);
  }
  std::map<int, IntMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    const auto &a = out.sums.at(k), &b = out.sums.at(k + 1);
    ModuleMap d = ModuleMap::zero(a.module, b.module);
    for (std::size_t i = 0; i < cs.size(); ++i) d = d + b.injections[i] * cs[i].differential(k) * a.projections[i];
    diffs.emplace(k, d.matrix());
  }
  out.complex = Complex::from_maps(ring, comps, diffs);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::map<int, ModuleMap> in, pr;
    for (int k = lo; k <= hi; ++k) {
      const auto &s = out.sums.at(k);
      in.emplace(k, ModuleMap::trusted(cs[i].component(k), out.complex.component(k), s.injections[i].matrix()));
      pr.emplace(k, ModuleMap::trusted(out.complex.component(k), cs[i].component(k), s.projections[i].matrix()));
    }
    out.injections.emplace_back(cs[i], out.complex, in);
    out.projections.emplace_back(out.complex, cs[i], pr);
  }
  return out;
}

} // namespace homkit
