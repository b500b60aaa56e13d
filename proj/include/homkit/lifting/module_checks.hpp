#pragma once

#include "homkit/lifting/search.hpp"
#include "homkit/lifting/verdict.hpp"

namespace homkit {

/// A map the lifting property is tested against, with where it came from.
struct ModuleProbe {
  ModuleMap map;
  std::string origin;
};

/// Monos A -> B with B/A in x: every submodule inclusion of every universe
/// member, followed by the kernel of a free presentation of every member of
/// x in the universe.
inline auto injective_module_probes(const XClassSpec &x, const ModuleUniverse &u) -> std::vector<ModuleProbe> {
  std::vector<ModuleProbe> out;
  auto mods = enumerate_modules(u);
  for (const auto &b : mods) {
    FiniteModule fb(b);
    for (const auto &s : fb.submodules()) {
      if (s.count() == 1 || s.count() == fb.size()) continue;
      auto sub = submodule_generated(b, fb.generators(s));
      if (!x.contains(cokernel(sub.inclusion).module)) continue;
      out.push_back({sub.inclusion, "submodule of " + b.to_string()});
    }
  }
  for (const auto &m : mods) {
    if (m.is_zero() || !x.contains(m)) continue;
    auto k = kernel(canonical_presentation(m));
    if (k.sub.is_zero()) continue;
    out.push_back({k.inclusion, "presentation kernel of " + m.to_string()});
  }
  return out;
}

/// Epis A -> A/K with K in x: quotients of every universe member by its
/// submodules in x, followed by H -> H/X for the injective hull H of every
/// member X of x in the universe.
inline auto projective_module_probes(const XClassSpec &x, const ModuleUniverse &u) -> std::vector<ModuleProbe> {
  std::vector<ModuleProbe> out;
  auto mods = enumerate_modules(u);
  for (const auto &a : mods) {
    FiniteModule fa(a);
    for (const auto &s : fa.submodules()) {
      if (s.count() == 1 || s.count() == fa.size()) continue;
      auto sub = submodule_generated(a, fa.generators(s));
      if (!x.contains(sub.module)) continue;
      out.push_back({cokernel(sub.inclusion).projection, "quotient of " + a.to_string()});
    }
  }
  for (const auto &m : mods) {
    if (m.is_zero() || !x.contains(m)) continue;
    auto h = injective_hull(m);
    auto q = cokernel(h.embedding);
    if (q.module.is_zero()) continue;
    out.push_back({q.projection, "hull quotient of " + m.to_string()});
  }
  return out;
}

namespace detail {

inline auto unit(std::size_t n, std::size_t i) -> Element {
  Element e(n, 0);
  e[i] = 1;
  return e;
}

inline void confirm(Verdict &v, SearchResult r) {
  if (r == SearchResult::NotFound) {
    v.counterexample_confirmed = true;
  } else if (r == SearchResult::Found) {
    throw std::logic_error("solver reported no lift but exhaustive search found one");
  } else {
    v.note += (v.note.empty() ? "" : "; ") + std::string("counterexample too large for exhaustive confirmation");
  }
}

} // namespace detail

/// Extension of every f: A -> e along every probe A -> B. The Ext^1 criterion
/// over the members of x in the universe is evaluated alongside.
inline auto x_injective_module(const FpModule &e, const XClassSpec &x, const ModuleUniverse &u,
                               const std::vector<ModuleProbe> &probes) -> Verdict {
  Verdict v;
  v.universe = u.describe() + "; class " + x.to_string();
  for (const auto &p : probes) {
    const ModuleMap &i = p.map;
    HomModule ha(i.source(), e), hb(i.target(), e);
    ModuleMap r = precompose_map(i, hb, ha);
    for (std::size_t c = 0; c < ha.module().rank(); ++c) {
      ++v.instances;
      auto y = preimage(r, detail::unit(ha.module().rank(), c));
      ModuleMap f = ha.decode(detail::unit(ha.module().rank(), c));
      if (!y) {
        v.status = Status::Fails;
        v.counterexample = Witness{"no extension along " + p.origin, {i, f}, {}, {}, {}};
        detail::confirm(v, detail::search_module_extension(i, f));
        break;
      }
      ModuleMap g = hb.decode(*y);
      if (!(g * i == f)) throw std::logic_error("extension does not restrict to f");
      add_certificate(v, {"extension along " + p.origin, {i, f, g}, {}, {}, {}});
    }
    if (v.status == Status::Fails) break;
  }
  bool ext = true;
  for (const auto &m : enumerate_modules(u))
    if (x.contains(m) && !ext1_module(m, e).is_zero()) ext = false;
  v.cross_check_agrees = ext == v.holds();
  return v;
}

inline auto x_injective_module(const FpModule &e, const XClassSpec &x, const ModuleUniverse &u) -> Verdict {
  return x_injective_module(e, x, u, injective_module_probes(x, u));
}

/// Lifting of every h: p -> B along every probe A -> B. The Ext^1(p, X)
/// criterion over the members of x in the universe is evaluated alongside.
inline auto x_projective_module(const FpModule &p, const XClassSpec &x, const ModuleUniverse &u,
                                const std::vector<ModuleProbe> &probes) -> Verdict {
  Verdict v;
  v.universe = u.describe() + "; class " + x.to_string();
  for (const auto &pr : probes) {
    const ModuleMap &q = pr.map;
    HomModule ha(p, q.source()), hb(p, q.target());
    ModuleMap r = postcompose_map(q, ha, hb);
    for (std::size_t c = 0; c < hb.module().rank(); ++c) {
      ++v.instances;
      auto y = preimage(r, detail::unit(hb.module().rank(), c));
      ModuleMap h = hb.decode(detail::unit(hb.module().rank(), c));
      if (!y) {
        v.status = Status::Fails;
        v.counterexample = Witness{"no lift along " + pr.origin, {q, h}, {}, {}, {}};
        detail::confirm(v, detail::search_module_lift(q, h));
        break;
      }
      ModuleMap g = ha.decode(*y);
      if (!(q * g == h)) throw std::logic_error("lift does not cover h");
      add_certificate(v, {"lift along " + pr.origin, {q, h, g}, {}, {}, {}});
    }
    if (v.status == Status::Fails) break;
  }
  bool ext = true;
  for (const auto &m : enumerate_modules(u))
    if (x.contains(m) && !ext1_module(p, m).is_zero()) ext = false;
  v.cross_check_agrees = ext == v.holds();
  return v;
}

inline auto x_projective_module(const FpModule &p, const XClassSpec &x, const ModuleUniverse &u) -> Verdict {
  return x_projective_module(p, x, u, projective_module_probes(x, u));
}

} // namespace homkit
