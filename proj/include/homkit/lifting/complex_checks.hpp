#pragma once

#include "homkit/lifting/module_checks.hpp"

namespace homkit {

struct ComplexProbe {
  ChainMap map;
  std::string origin;
};

struct ComplexProbeSet {
  std::string universe;
  std::vector<ComplexProbe> probes;
};

inline auto support_overlaps(const Complex &a, const Complex &b) -> bool {
  return !a.is_zero() && !b.is_zero() && a.lo() <= b.hi() && b.lo() <= a.hi();
}

/// The disk map D^k(f): D^k(A) -> D^k(B).
inline auto disk_map(int k, const ModuleMap &f) -> ChainMap {
  return {disk(k, f.source()), disk(k, f.target()), {{k, f}, {k + 1, f}}};
}

/// Monos of complexes with cokernel an x-complex: proper nonzero subcomplexes
/// of universe members, then D^k(i) for module probes i and k in the window.
inline auto injective_complex_probes(const XClassSpec &x, const ComplexUniverse &cu) -> ComplexProbeSet {
  ComplexProbeSet ps{cu.describe() + "; class " + x.to_string(), {}};
  for (const auto &b : enumerate_complexes(cu)) {
    if (b.is_zero()) continue;
    FiniteComplex fc(b);
    auto full = fc.full_selection(), zero = fc.zero_selection();
    fc.for_each_subcomplex([&](const FiniteComplex::Selection &s) {
      if (s == full || s == zero) return true;
      auto data = fc.realize(s);
      if (contains_complex(x, data.quotient)) ps.probes.push_back({data.inclusion, "subcomplex of " + b.to_string()});
      return true;
    });
  }
  auto mp = injective_module_probes(x, cu.base);
  for (int k = cu.lo; k <= cu.hi; ++k)
    for (const auto &p : mp) ps.probes.push_back({disk_map(k, p.map), "disk " + std::to_string(k) + " on " + p.origin});
  return ps;
}

/// Epis of complexes with kernel an x-complex: quotients of universe members
/// by proper nonzero x-subcomplexes, then D^{k-1}(q) for module probes q.
inline auto projective_complex_probes(const XClassSpec &x, const ComplexUniverse &cu) -> ComplexProbeSet {
  ComplexProbeSet ps{cu.describe() + "; class " + x.to_string(), {}};
  for (const auto &b : enumerate_complexes(cu)) {
    if (b.is_zero()) continue;
    FiniteComplex fc(b);
    auto full = fc.full_selection(), zero = fc.zero_selection();
    fc.for_each_subcomplex([&](const FiniteComplex::Selection &s) {
      if (s == full || s == zero) return true;
      auto data = fc.realize(s);
      if (contains_complex(x, data.sub)) ps.probes.push_back({data.projection, "quotient of " + b.to_string()});
      return true;
    });
  }
  auto mp = projective_module_probes(x, cu.base);
  for (int k = cu.lo; k <= cu.hi; ++k)
    for (const auto &p : mp)
      ps.probes.push_back({disk_map(k - 1, p.map), "disk " + std::to_string(k - 1) + " on " + p.origin});
  return ps;
}

/// Window [c.lo - 1, c.hi + 1] on the given module universe.
inline auto default_complex_universe(const Complex &c, const ModuleUniverse &base) -> ComplexUniverse {
  int lo = c.is_zero() ? 0 : c.lo(), hi = c.is_zero() ? 0 : c.hi();
  return {base, lo - 1, hi + 1, 2, 4, {}};
}

namespace detail {
inline void confirm_complex(Verdict &v, SearchResult r) {
  if (r == SearchResult::NotFound) {
    v.counterexample_confirmed = true;
  } else if (r == SearchResult::Found) {
    throw std::logic_error("solver reported no lift but exhaustive search found one");
  } else {
    v.note += (v.note.empty() ? "" : "; ") + std::string("counterexample too large for exhaustive confirmation");
  }
}
} // namespace detail

/// Every chain map A -> c extends along every probe A -> B.
inline auto x_injective_complex(const Complex &c, const ComplexProbeSet &ps) -> Verdict {
  Verdict v;
  v.universe = ps.universe;
  for (const auto &p : ps.probes) {
    const ChainMap &phi = p.map;
    if (!support_overlaps(phi.source(), c)) continue;
    for (const auto &f : chain_map_generators(phi.source(), c)) {
      ++v.instances;
      auto g = extend_along(phi, f, c);
      if (!g) {
        v.status = Status::Fails;
        v.counterexample = Witness{"no extension along " + p.origin, {}, {phi, f}, {}, {}};
        detail::confirm_complex(v, detail::search_chain_extension(phi, f));
        return v;
      }
      if (!(*g * phi == f) || !g->is_chain_map()) throw std::logic_error("extension check failed");
      add_certificate(v, {"extension along " + p.origin, {}, {phi, f, *g}, {}, {}});
    }
  }
  return v;
}

inline auto x_injective_complex(const Complex &c, const XClassSpec &x, const ComplexUniverse &cu) -> Verdict {
  return x_injective_complex(c, injective_complex_probes(x, cu));
}

/// Every chain map c -> B lifts along every probe A -> B.
inline auto x_projective_complex(const Complex &c, const ComplexProbeSet &ps) -> Verdict {
  Verdict v;
  v.universe = ps.universe;
  for (const auto &p : ps.probes) {
    const ChainMap &q = p.map;
    if (!support_overlaps(c, q.target())) continue;
    for (const auto &h : chain_map_generators(c, q.target())) {
      ++v.instances;
      auto g = lift_along(q, h, c);
      if (!g) {
        v.status = Status::Fails;
        v.counterexample = Witness{"no lift along " + p.origin, {}, {q, h}, {}, {}};
        detail::confirm_complex(v, detail::search_chain_lift(q, h));
        return v;
      }
      if (!(q * *g == h) || !g->is_chain_map()) throw std::logic_error("lift check failed");
      add_certificate(v, {"lift along " + p.origin, {}, {q, h, *g}, {}, {}});
    }
  }
  return v;
}

inline auto x_projective_complex(const Complex &c, const XClassSpec &x, const ComplexUniverse &cu) -> Verdict {
  return x_projective_complex(c, projective_complex_probes(x, cu));
}

} // namespace homkit
