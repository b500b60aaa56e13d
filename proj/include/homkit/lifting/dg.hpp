#pragma once

#include "homkit/lifting/complex_checks.hpp"

namespace homkit {

/// Shifts t for which shift(e, t) meets the support of i.
inline auto overlapping_shifts(const Complex &e, const Complex &i) -> std::pair<int, int> {
  if (e.is_zero() || i.is_zero()) return {0, -1};
  return {e.lo() - i.hi(), e.hi() - i.lo()};
}

/// Every chain map from a shift of a member of the eps1 universe into i is
/// null-homotopic. Null-homotopic maps form a subgroup, so generators suffice.
inline auto eps1_perp_homotopy(const Complex &i, const std::string &universe, const std::vector<Complex> &eps1)
    -> Verdict {
  Verdict v;
  v.universe = universe;
  for (const auto &e : eps1) {
    auto [lo, hi] = overlapping_shifts(e, i);
    for (int t = lo; t <= hi; ++t) {
      Complex es = shift(e, t);
      for (const auto &g : chain_map_generators(es, i)) {
        ++v.instances;
        auto h = null_homotopy(g);
        if (!h) {
          v.status = Status::Fails;
          v.counterexample = Witness{"chain map from a shift of an eps1 member is not null-homotopic", {}, {g}, {e}, {}};
          auto r = detail::search_homotopy(g);
          if (r == detail::SearchResult::Found) throw std::logic_error("solver missed a homotopy");
          v.counterexample_confirmed = r == detail::SearchResult::NotFound;
          if (!v.counterexample_confirmed) v.note = "counterexample too large for exhaustive confirmation";
          return v;
        }
        if (!h->verify()) throw std::logic_error("homotopy identity fails");
        add_certificate(v, {"null-homotopy", {}, {g}, {e}, *h});
      }
    }
  }
  return v;
}

inline auto eps1_perp_homotopy(const Complex &i, const XClassSpec &x, const Eps1Universe &eu) -> Verdict {
  return eps1_perp_homotopy(i, eu.describe() + "; class " + x.to_string(), enumerate_eps1(eu, x));
}

namespace detail {
inline auto component_failure(const Verdict &m, int k, const FpModule &c) -> Verdict {
  Verdict v = m;
  v.status = Status::Fails;
  v.note = "component in degree " + std::to_string(k) + " (" + c.to_string() + ") fails: " +
           (m.counterexample ? m.counterexample->description : std::string());
  return v;
}
} // namespace detail

/// Components are x-injective and Hom(E, i) is exact for every E in eps1.
inline auto dg_x_injective(const Complex &i, const XClassSpec &x, const Eps1Universe &eu,
                           const std::vector<Complex> &eps1) -> Verdict {
  auto probes = injective_module_probes(x, eu.base);
  Verdict v;
  v.universe = eu.describe() + "; class " + x.to_string();
  for (int k = i.lo(); k <= i.hi(); ++k) {
    auto m = x_injective_module(i.component(k), x, eu.base, probes);
    v.instances += m.instances;
    if (!m.holds()) return detail::component_failure(m, k, i.component(k));
  }
  for (const auto &e : eps1) {
    ++v.instances;
    auto r = is_exact(hom_complex(e, i));
    if (!r.exact) {
      v.status = Status::Fails;
      v.counterexample = Witness{"Hom(E, I) not exact in degree " + std::to_string(*r.first_nonexact), {}, {}, {e}, {}};
      v.counterexample_confirmed = true;
      return v;
    }
  }
  return v;
}

inline auto dg_x_injective(const Complex &i, const XClassSpec &x, const Eps1Universe &eu) -> Verdict {
  return dg_x_injective(i, x, eu, enumerate_eps1(eu, x));
}

/// Components are x-projective and Hom(p, E) is exact for every E in eps1.
inline auto dg_x_projective(const Complex &p, const XClassSpec &x, const Eps1Universe &eu,
                            const std::vector<Complex> &eps1) -> Verdict {
  auto probes = projective_module_probes(x, eu.base);
  Verdict v;
  v.universe = eu.describe() + "; class " + x.to_string();
  for (int k = p.lo(); k <= p.hi(); ++k) {
    auto m = x_projective_module(p.component(k), x, eu.base, probes);
    v.instances += m.instances;
    if (!m.holds()) return detail::component_failure(m, k, p.component(k));
  }
  for (const auto &e : eps1) {
    ++v.instances;
    auto r = is_exact(hom_complex(p, e));
    if (!r.exact) {
      v.status = Status::Fails;
      v.counterexample = Witness{"Hom(P, E) not exact in degree " + std::to_string(*r.first_nonexact), {}, {}, {e}, {}};
      v.counterexample_confirmed = true;
      return v;
    }
  }
  return v;
}

inline auto dg_x_projective(const Complex &p, const XClassSpec &x, const Eps1Universe &eu) -> Verdict {
  return dg_x_projective(p, x, eu, enumerate_eps1(eu, x));
}

} // namespace homkit
