#pragma once

#include "homkit/construct/precover.hpp"

namespace homkit {

/// Data of the step that adds Y^{k-1} to a preenvelope of the truncation to
/// [k, hi]. The envelope has E^j = I^j + I^{j+1} for the module
/// preenvelopes I^j; t and s are the components of the extension
/// D^{k-1}(I^{k-1}) -> E(k) in degrees k-1 and k.
struct PreenvelopeStep {
  int degree = 0;
  ModuleMap s, t;
  /// The differential E^{k-1} -> E^k before the step.
  ModuleMap lambda1;
  /// f_{k-1}: Y^{k-1} -> I^{k-1}.
  ModuleMap f_new;
  /// a^{k-1}: Y^{k-1} -> Y^k.
  ModuleMap a;
  /// (f_k, 0): Y^k -> E^k.
  ModuleMap f_bar;
};

struct PreenvelopeResult {
  Complex envelope;
  ChainMap map;
  std::vector<OracleCall> oracle_calls;
  std::vector<BuildRecord> log;
  std::vector<PreenvelopeStep> steps;
  /// Coker(map) as a quotient of the envelope.
  SubcomplexData cokernel;
};

/// Preenvelope of a bounded complex by downward induction from the top
/// degree. E(hi) is the disk D^{hi-1} on a module preenvelope of Y^hi; each
/// step extends Y^{k-1} -> E(k) along D^{k-1}(I^{k-1}) and glues with
/// lambda_{k-2}(x) = (x, -t(x)) and lambda_{k-1}(x, y) = s(x) + lambda^1(y).
inline auto preenvelope_bounded(const Complex &y, const XClassSpec &x, const PreenvelopeStrategy &oracle)
    -> PreenvelopeResult {
  const RingSpec &ring = y.ring();
  PreenvelopeResult out;
  if (y.is_zero()) {
    out.envelope = Complex(ring);
    out.map = ChainMap::zero(y, out.envelope);
    out.cokernel = quotient_by_image(out.map);
    return out;
  }
  const FpModule zero = FpModule::zero(ring);
  std::map<int, FpModule> e;
  std::map<int, ModuleMap> f;
  auto call = [&](int k) {
    auto r = oracle(y.component(k));
    if (!is_mono(r.map) || !(r.map.source() == y.component(k))) throw std::logic_error("module oracle returned a non-mono");
    if (!x.contains(cokernel(r.map).module)) throw std::logic_error("module oracle cokernel outside the class");
    e.emplace(k, r.map.target());
    f.emplace(k, r.map);
    out.oracle_calls.push_back({k, y.component(k), r.map.target(), r.strategy});
  };

  int lo = y.lo(), hi = y.hi();
  call(hi);
  std::map<int, DirectSum> sums;
  std::map<int, ModuleMap> lambda, psi;
  sums.emplace(hi - 1, detail::sum_of(ring, zero, e.at(hi)));
  sums.emplace(hi, detail::sum_of(ring, e.at(hi), zero));
  lambda.emplace(hi - 1, sums.at(hi).injections[0] * sums.at(hi - 1).projections[1]);
  psi.emplace(hi, sums.at(hi).injections[0] * f.at(hi));

  for (int k = hi; k > lo; --k) {
    Complex cur = detail::assemble(ring, sums, lambda);
    call(k - 1);
    const FpModule &in = e.at(k - 1);
    const FpModule yn = y.component(k - 1);
    ChainMap mono(sphere(k, yn), disk(k - 1, in), {{k, f.at(k - 1)}});
    ChainMap h(sphere(k, yn), cur, {{k, psi.at(k) * y.differential(k - 1)}});
    auto problem = extension_problem(mono, h, cur);
    auto rec = detail::record_of("extend into E(" + std::to_string(k) + ") along the disk on I^" + std::to_string(k - 1),
                                 problem);
    auto g = problem.solve();
    if (!g) throw BuildFailure("preenvelope step " + std::to_string(k - 1) + " has no extension", rec,
                               problem.system.system());
    PreenvelopeStep st;
    st.degree = k;
    st.t = ModuleMap::trusted(in, sums.at(k - 1).module, g->component(k - 1).matrix());
    st.s = ModuleMap::trusted(in, sums.at(k).module, g->component(k).matrix());
    st.lambda1 = lambda.at(k - 1);
    st.f_new = f.at(k - 1);
    st.a = y.differential(k - 1);
    st.f_bar = psi.at(k);
    rec.solved = true;
    rec.chosen = {{"t", st.t}, {"s", st.s}};
    out.log.push_back(rec);

    DirectSum old = sums.at(k - 1);
    sums.insert_or_assign(k - 1, detail::sum_of(ring, in, e.at(k)));
    sums.insert_or_assign(k - 2, detail::sum_of(ring, zero, in));
    const DirectSum &mid = sums.at(k - 1), &bot = sums.at(k - 2);
    lambda.insert_or_assign(k - 2, mid.injections[0] * bot.projections[1] -
                                       mid.injections[1] * old.projections[1] * st.t * bot.projections[1]);
    lambda.insert_or_assign(k - 1, st.s * mid.projections[0] + lambda.at(k - 1) * old.injections[1] * mid.projections[1]);
    psi.insert_or_assign(k - 1, mid.injections[0] * f.at(k - 1));
    out.steps.push_back(std::move(st));
  }
  out.envelope = detail::assemble(ring, sums, lambda);
  std::map<int, ModuleMap> comps;
  for (const auto &[k, m] : psi)
    comps.emplace(k, ModuleMap::trusted(y.component(k), out.envelope.component(k), m.matrix()));
  out.map = ChainMap(y, out.envelope, comps);
  if (!out.map.is_chain_map()) throw std::logic_error("preenvelope map is not a chain map");
  out.cokernel = quotient_by_image(out.map);
  return out;
}

inline auto preenvelope_bounded(const Complex &y, const XClassSpec &x) -> PreenvelopeResult {
  return preenvelope_bounded(y, x, default_preenvelope_strategy(x, ModuleUniverse{y.ring(), 8}));
}

/// Plain matrix recomputation of the step constraints.
inline auto preenvelope_constraints(const PreenvelopeResult &r) -> std::vector<ConstraintCheck> {
  std::vector<ConstraintCheck> out;
  for (const auto &st : r.steps) {
    const FpModule &ek = st.s.target();
    out.push_back({"(f_k, 0) a^{k-1} = s f_{k-1}", st.degree,
                   detail::same_in(ek, st.f_bar.matrix() * st.a.matrix(), st.s.matrix() * st.f_new.matrix())});
    out.push_back({"lambda^1 t = s", st.degree, detail::same_in(ek, st.lambda1.matrix() * st.t.matrix(), st.s.matrix())});
  }
  return out;
}

struct PreenvelopeReport {
  bool exact = false;
  bool degreewise_mono = false;
  bool cokernel_in_class = false;
  bool components_injective = false;
  bool factorization = false;
  std::size_t competitors = 0;
  std::size_t competitor_maps = 0;
  std::vector<ConstraintCheck> constraints;

  [[nodiscard]] auto properties_hold() const -> bool {
    return exact && degreewise_mono && cokernel_in_class && components_injective && factorization;
  }
  [[nodiscard]] auto constraints_hold() const -> bool {
    for (const auto &c : constraints)
      if (!c.holds) return false;
    return true;
  }
};

inline auto verify_preenvelope(const PreenvelopeResult &r, const XClassSpec &x, const ModuleUniverse &u,
                               const std::vector<Complex> *competitors = nullptr) -> PreenvelopeReport {
  PreenvelopeReport rep;
  const Complex &e = r.envelope, &y = r.map.source();
  rep.exact = is_exact(e).exact;
  rep.degreewise_mono = r.map.is_chain_map();
  rep.cokernel_in_class = contains_complex(x, r.cokernel.quotient);
  rep.components_injective = true;
  auto probes = injective_module_probes(x, u);
  for (int k = e.lo(); k <= e.hi() && !e.is_zero(); ++k) {
    rep.cokernel_in_class = rep.cokernel_in_class && x.contains(cokernel(r.map.component(k)).module);
    rep.components_injective = rep.components_injective && x_injective_module(e.component(k), x, u, probes).holds();
  }
  for (int k = y.lo(); k <= y.hi() && !y.is_zero(); ++k)
    rep.degreewise_mono = rep.degreewise_mono && is_mono(r.map.component(k));
  rep.factorization = true;
  if (!y.is_zero()) {
    std::vector<Complex> own;
    if (!competitors) {
      ComplexUniverse cu{u, y.lo() - 1, y.hi() + 1, 2, 4, {}};
      own = exact_competitors(cu, [&](const FpModule &m) { return x_injective_module(m, x, u, probes).holds(); });
    }
    const auto &comps = competitors ? *competitors : own;
    rep.competitors = comps.size();
    for (const auto &q : comps)
      for (const auto &g : chain_map_generators(y, q)) {
        ++rep.competitor_maps;
        if (!extend_along(r.map, g, q)) rep.factorization = false;
      }
  }
  rep.constraints = preenvelope_constraints(r);
  return rep;
}

} // namespace homkit
