#pragma once

#include "homkit/complexes/complex.hpp"

namespace homkit {

/// A family of unknown maps source^k -> target^{k+deg}, one per degree where
/// both modules are nonzero.
struct GradedUnknown {
  Complex source, target;
  int degree = 0;
  std::map<int, MapSystem::Unknown> parts;

  [[nodiscard]] auto find(int k) const -> std::optional<MapSystem::Unknown> {
    auto it = parts.find(k);
    if (it == parts.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] auto maps(const std::vector<ModuleMap> &sol) const -> std::map<int, ModuleMap> {
    std::map<int, ModuleMap> out;
    for (const auto &[k, u] : parts) out.emplace(k, sol[u.id]);
    return out;
  }
};

inline auto add_graded_unknown(MapSystem &sys, const Complex &s, const Complex &t, int degree) -> GradedUnknown {
  GradedUnknown g{s, t, degree, {}};
  for (int k = s.lo(); k <= s.hi(); ++k) {
    FpModule a = s.component(k), b = t.component(k + degree);
    if (!a.is_zero() && !b.is_zero()) g.parts.emplace(k, sys.add_unknown(a, b));
  }
  return g;
}

/// Adds d_t f^k - f^{k+1} d_s = 0 for every k.
inline void add_chain_equations(MapSystem &sys, const GradedUnknown &f) {
  const Complex &s = f.source, &t = f.target;
  auto [lo, hi] = joint_range(s, t);
  for (int k = lo - 1; k <= hi; ++k) {
    FpModule a = s.component(k), b = t.component(k + 1);
    if (a.is_zero() || b.is_zero()) continue;
    std::vector<MapSystem::Term> terms;
    if (auto u = f.find(k)) terms.push_back({*u, t.differential(k).matrix(), std::nullopt, 1});
    if (auto u = f.find(k + 1)) terms.push_back({*u, std::nullopt, s.differential(k).matrix(), -1});
    sys.add_equation(a, b, terms, IntMatrix(b.rank(), a.rank()));
  }
}

/// Generators of the group of chain maps s -> t.
inline auto chain_map_generators(const Complex &s, const Complex &t) -> std::vector<ChainMap> {
  MapSystem sys(s.ring());
  auto f = add_graded_unknown(sys, s, t, 0);
  add_chain_equations(sys, f);
  std::vector<ChainMap> out;
  for (const auto &k : sys.kernel()) out.emplace_back(s, t, f.maps(k));
  return out;
}

/// Adds s^{k+1} d_s^k + d_t^{k-1} s^k = f^k for every k, for a degree -1 unknown s.
inline void add_homotopy_equations(MapSystem &sys, const GradedUnknown &s, const ChainMap &f) {
  const Complex &x = f.source(), &y = f.target();
  auto [lo, hi] = joint_range(x, y);
  for (int k = lo; k <= hi; ++k) {
    FpModule a = x.component(k), b = y.component(k);
    if (a.is_zero() || b.is_zero()) continue;
    std::vector<MapSystem::Term> terms;
    if (auto u = s.find(k + 1)) terms.push_back({*u, std::nullopt, x.differential(k).matrix(), 1});
    if (auto u = s.find(k)) terms.push_back({*u, y.differential(k - 1).matrix(), std::nullopt, 1});
    sys.add_equation(a, b, terms, f.component(k).matrix());
  }
}

/// The canonical homotopy f ~ 0, if one exists.
inline auto null_homotopy(const ChainMap &f) -> std::optional<Homotopy> {
  MapSystem sys(f.source().ring());
  auto s = add_graded_unknown(sys, f.source(), f.target(), -1);
  add_homotopy_equations(sys, s, f);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return Homotopy{f, s.maps(*sol)};
}

/// A chain map r: middle -> left with r o inj = id, if one exists.
inline auto splits(const ShortExactOfComplexes &seq) -> std::optional<ChainMap> {
  MapSystem sys(seq.middle.ring());
  auto r = add_graded_unknown(sys, seq.middle, seq.left, 0);
  add_chain_equations(sys, r);
  for (int k = seq.left.lo(); k <= seq.left.hi(); ++k) {
    FpModule a = seq.left.component(k);
    std::vector<MapSystem::Term> terms;
    if (auto u = r.find(k)) terms.push_back({*u, std::nullopt, seq.inj.component(k).matrix(), 1});
    sys.add_equation(a, a, terms, IntMatrix::identity(a.rank()));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return ChainMap(seq.middle, seq.left, r.maps(*sol));
}

/// The equations of a chain-map problem together with its unknown.
struct ChainProblem {
  MapSystem system;
  GradedUnknown unknown;

  [[nodiscard]] auto solve() const -> std::optional<ChainMap> {
    auto sol = system.solve();
    if (!sol) return std::nullopt;
    return ChainMap(unknown.source, unknown.target, unknown.maps(*sol));
  }
};

/// Equations for g: s -> t with g o f = h (f: s' -> s, h: s' -> t).
inline auto extension_problem(const ChainMap &f, const ChainMap &h, const Complex &t) -> ChainProblem {
  const Complex &s = f.target();
  MapSystem sys(s.ring());
  auto g = add_graded_unknown(sys, s, t, 0);
  add_chain_equations(sys, g);
  const Complex &a = f.source();
  for (int k = a.lo(); k <= a.hi(); ++k) {
    FpModule src = a.component(k), tgt = t.component(k);
    if (tgt.is_zero()) continue;
    std::vector<MapSystem::Term> terms;
    if (auto u = g.find(k)) terms.push_back({*u, std::nullopt, f.component(k).matrix(), 1});
    sys.add_equation(src, tgt, terms, h.component(k).matrix());
  }
  return {std::move(sys), std::move(g)};
}

/// Equations for g: t -> s with p o g = h (p: s -> s'', h: t -> s'').
inline auto lift_problem(const ChainMap &p, const ChainMap &h, const Complex &t) -> ChainProblem {
  const Complex &s = p.source(), &b = p.target();
  MapSystem sys(s.ring());
  auto g = add_graded_unknown(sys, t, s, 0);
  add_chain_equations(sys, g);
  for (int k = t.lo(); k <= t.hi(); ++k) {
    FpModule src = t.component(k), tgt = b.component(k);
    if (tgt.is_zero()) continue;
    std::vector<MapSystem::Term> terms;
    if (auto u = g.find(k)) terms.push_back({*u, p.component(k).matrix(), std::nullopt, 1});
    sys.add_equation(src, tgt, terms, h.component(k).matrix());
  }
  return {std::move(sys), std::move(g)};
}

/// A chain map g: s -> t with g o f = h (f: s' -> s, h: s' -> t), if one exists.
inline auto extend_along(const ChainMap &f, const ChainMap &h, const Complex &t) -> std::optional<ChainMap> {
  return extension_problem(f, h, t).solve();
}

/// A chain map g: t -> s with p o g = h (p: s -> s'', h: t -> s''), if one exists.
inline auto lift_along(const ChainMap &p, const ChainMap &h, const Complex &t) -> std::optional<ChainMap> {
  return lift_problem(p, h, t).solve();
}

} // namespace homkit
