#pragma once

#include "homkit/complexes/cone.hpp"
#include "homkit/lifting/dg.hpp"

namespace homkit {

enum class Side { Left, Right };
enum class Direction { FromProjective, ToInjective };

inline auto sphere_map(int k, const ModuleMap &f) -> ChainMap {
  return {sphere(k, f.source()), sphere(k, f.target()), {{k, f}}};
}

namespace detail {
inline auto hypothesis_failure(std::string universe, std::string why) -> Verdict {
  Verdict v;
  v.status = Status::HypothesisNotEstablished;
  v.universe = std::move(universe);
  v.note = std::move(why);
  return v;
}

inline auto with_probe(ComplexProbeSet ps, ChainMap p, std::string origin) -> ComplexProbeSet {
  ps.probes.push_back({std::move(p), std::move(origin)});
  ps.universe += " plus " + ps.probes.back().origin;
  return ps;
}
} // namespace detail

/// Exactness in the middle of Hom(I, A) -> Hom(I, B) -> Hom(I, C) (left side)
/// or Hom(C, I) -> Hom(B, I) -> Hom(A, I) (right side), with A, B, C placed
/// as spheres in each degree of the probe's support. When probe classes are
/// supplied, the probe's membership is checked first.
inline auto hom_exactness(const ModuleMap &beta, const ModuleMap &theta, const Complex &probe, Side side,
                          const XClassSpec &x, const ComplexProbeSet *probes = nullptr) -> Verdict {
  if (!(theta * beta).is_zero()) throw std::invalid_argument("hom_exactness: theta * beta is not zero");
  std::string universe = "spheres on the row across the probe support; class " + x.to_string();
  if (FiniteModule(kernel(theta).sub).size() != FiniteModule(image(beta).sub).size())
    return detail::hypothesis_failure(universe, "row is not exact at B");
  if (side == Side::Left && !x.contains(kernel(theta).sub))
    return detail::hypothesis_failure(universe, "Ker theta is not in the class");
  if (side == Side::Right && !x.contains(cokernel(theta).module))
    return detail::hypothesis_failure(universe, "C/Im theta is not in the class");
  Verdict v;
  v.universe = universe;
  if (probes != nullptr) {
    auto m = side == Side::Left ? x_projective_complex(probe, *probes) : x_injective_complex(probe, *probes);
    if (!m.holds()) return detail::hypothesis_failure(universe, "probe class membership not established");
    v.universe += "; probe checked against " + probes->universe;
  } else {
    v.note = "probe class membership not checked";
  }
  if (probe.is_zero()) return v;
  for (int k = probe.lo(); k <= probe.hi(); ++k) {
    const FpModule pk = probe.component(k);
    if (side == Side::Left) {
      auto sb = sphere_map(k, beta);
      const Complex &sb_target = sb.target();
      detail::for_each_hom(pk, beta.target(), [&](const ModuleMap &g) {
        if (!(g * probe.differential(k - 1)).is_zero()) return true;
        if (!(theta * g).is_zero()) return true;
        ++v.instances;
        ChainMap gc(probe, sb_target, {{k, g}});
        auto f = lift_along(sb, gc, probe);
        if (!f) {
          v.status = Status::Fails;
          v.counterexample = Witness{"map into B killed by theta has no preimage in degree " + std::to_string(k),
                                     {beta, theta, g}, {gc}, {probe}, {}};
          v.counterexample_confirmed = detail::search_chain_lift(sb, gc) == detail::SearchResult::NotFound;
          return false;
        }
        add_certificate(v, {"preimage in degree " + std::to_string(k), {g}, {*f}, {}, {}});
        return true;
      });
    } else {
      auto st = sphere_map(k, theta);
      const Complex &sb = st.source();
      detail::for_each_hom(beta.target(), pk, [&](const ModuleMap &g) {
        if (!(probe.differential(k) * g).is_zero()) return true;
        if (!(g * beta).is_zero()) return true;
        ++v.instances;
        ChainMap gc(sb, probe, {{k, g}});
        auto h = extend_along(st, gc, probe);
        if (!h) {
          v.status = Status::Fails;
          v.counterexample = Witness{"map out of B killed by beta does not factor through theta in degree " +
                                         std::to_string(k),
                                     {beta, theta, g}, {gc}, {probe}, {}};
          v.counterexample_confirmed = detail::search_chain_extension(st, gc) == detail::SearchResult::NotFound;
          return false;
        }
        add_certificate(v, {"factorization in degree " + std::to_string(k), {g}, {*h}, {}, {}});
        return true;
      });
    }
    if (!v.holds()) return v;
  }
  return v;
}

/// Builds the null-homotopy of f from the cone construction: a lift along
/// M(id_Y)[-1] -> Y when the source is x-projective and the target an
/// x-complex, or an extension along X -> M(id_X) in the dual case.
inline auto null_map_property(const ChainMap &f, Direction dir, const XClassSpec &x, const ComplexProbeSet &base)
    -> Verdict {
  const Complex &src = f.source(), &tgt = f.target();
  if (dir == Direction::FromProjective) {
    if (!contains_complex(x, tgt)) return detail::hypothesis_failure(base.universe, "target is not an x-complex");
    auto cone = mapping_cone(ChainMap::identity(tgt));
    ChainMap pi = shift(cone.sequence.surj, -1);
    auto ps = detail::with_probe(base, pi, "M(id_Y)[-1] -> Y");
    auto m = x_projective_complex(src, ps);
    if (!m.holds()) return detail::hypothesis_failure(ps.universe, "source is not x-projective");
    Verdict v;
    v.universe = ps.universe;
    v.instances = 1;
    auto g = lift_along(pi, f, src);
    if (!g) throw std::logic_error("lift along the cone projection missing for an x-projective source");
    Homotopy s{f, {}};
    for (int k = src.lo(); k <= src.hi() && !src.is_zero(); ++k) {
      auto it = cone.sums.find(k - 1);
      if (it == cone.sums.end()) continue;
      s.components.emplace(k, -(it->second.projections[1] * g->component(k)));
    }
    if (!s.verify()) throw std::logic_error("cone homotopy fails the homotopy identity");
    add_certificate(v, {"homotopy from the cone lift", {}, {f, *g}, {}, s});
    if (!null_homotopy(f)) throw std::logic_error("solver disagrees with the cone homotopy");
    return v;
  }
  if (!contains_complex(x, src)) return detail::hypothesis_failure(base.universe, "source is not an x-complex");
  auto cone = mapping_cone(ChainMap::identity(src));
  ChainMap i = cone.sequence.inj;
  auto ps = detail::with_probe(base, i, "X -> M(id_X)");
  auto m = x_injective_complex(tgt, ps);
  if (!m.holds()) return detail::hypothesis_failure(ps.universe, "target is not x-injective");
  Verdict v;
  v.universe = ps.universe;
  v.instances = 1;
  auto g = extend_along(i, f, tgt);
  if (!g) throw std::logic_error("extension along the cone injection missing for an x-injective target");
  Homotopy s{f, {}};
  for (int k = src.lo(); k <= src.hi() && !src.is_zero(); ++k) {
    auto it = cone.sums.find(k - 1);
    if (it == cone.sums.end()) continue;
    s.components.emplace(k, g->component(k - 1) * it->second.injections[0]);
  }
  if (!s.verify()) throw std::logic_error("cone homotopy fails the homotopy identity");
  add_certificate(v, {"homotopy from the cone extension", {}, {f, *g}, {}, s});
  if (!null_homotopy(f)) throw std::logic_error("solver disagrees with the cone homotopy");
  return v;
}

inline auto null_map_property(const ChainMap &f, Direction dir, const XClassSpec &x, const ModuleUniverse &u)
    -> Verdict {
  auto [lo, hi] = joint_range(f.source(), f.target());
  ComplexUniverse cu{u, lo - 1, hi + 1, 2, 4, {}};
  auto ps = dir == Direction::FromProjective ? projective_complex_probes(x, cu) : injective_complex_probes(x, cu);
  return null_map_property(f, dir, x, ps);
}

/// A retraction of incl: xc -> y, which exists when xc is x-injective and the
/// cokernel of incl is an x-complex.
inline auto summand_retraction(const Complex &xc, const Complex &y, const ChainMap &incl, const XClassSpec &x,
                               const ComplexProbeSet &base) -> std::optional<ChainMap> {
  if (!(incl.source() == xc) || !(incl.target() == y)) throw std::invalid_argument("summand_retraction: incl is not xc -> y");
  for (int k = xc.lo(); k <= xc.hi() && !xc.is_zero(); ++k)
    if (!is_mono(incl.component(k))) throw HypothesisNotEstablished("inclusion is not degreewise mono");
  if (!contains_complex(x, quotient_by_image(incl).quotient))
    throw HypothesisNotEstablished("cokernel of the inclusion is not an x-complex");
  auto ps = detail::with_probe(base, incl, "the inclusion");
  if (!x_injective_complex(xc, ps).holds()) throw HypothesisNotEstablished("complex is not x-injective");
  auto r = extend_along(incl, ChainMap::identity(xc), xc);
  if (r && !(*r * incl == ChainMap::identity(xc))) throw std::logic_error("retraction check failed");
  return r;
}

inline auto summand_retraction(const Complex &xc, const Complex &y, const ChainMap &incl, const XClassSpec &x,
                               const ModuleUniverse &u) -> std::optional<ChainMap> {
  auto [lo, hi] = joint_range(xc, y);
  return summand_retraction(xc, y, incl, x, injective_complex_probes(x, {u, lo - 1, hi + 1, 2, 4, {}}));
}

} // namespace homkit
