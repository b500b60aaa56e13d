#include "complex_oracle.hpp"
#include "module_oracle.hpp"

#include "homkit/lifting.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace homkit;

namespace {

const RingSpec Z4 = RingSpec::integers_mod(4);
const RingSpec Z9 = RingSpec::integers_mod(9);

auto mod(const RingSpec &r, std::vector<Integer> f) -> FpModule { return FpModule::from_factors(r, std::move(f)); }

const FpModule M2 = mod(Z4, {2});
const FpModule M4 = mod(Z4, {4});

auto key(const ModuleMap &f) -> oracle::Vec64 {
  oracle::Vec64 k;
  const auto &m = f.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).get_si());
  return k;
}

/// Monos with cokernel in x (or epis with kernel in x) between modules up to
/// the bound, by exhaustive enumeration of all maps. Free modules of rank up
/// to three also appear as targets of monos and sources of epis, so that
/// presentations of small class members are covered.
auto brute_probes(const XClassSpec &x, const RingSpec &ring, std::int64_t bound, bool mono) -> std::vector<ModuleMap> {
  auto mods = oracle::modules_up_to(ring, bound);
  std::vector<ModuleMap> out;
  auto consider = [&](const FpModule &a, const FpModule &b, bool extra) {
    for (const auto &f : oracle::all_maps(a, b)) {
      if (mono && oracle::injective(f)) {
        auto c = cokernel(f).module;
        if (x.contains(c) && (!extra || static_cast<std::int64_t>(c.size()) <= bound)) out.push_back(f);
      }
      if (!mono && oracle::surjective(f)) {
        auto k = kernel(f).sub;
        if (x.contains(k) && (!extra || static_cast<std::int64_t>(k.size()) <= bound)) out.push_back(f);
      }
    }
  };
  for (const auto &a : mods)
    for (const auto &b : mods) consider(a, b, false);
  for (std::size_t r = 1; r <= 3; ++r) {
    auto fr = FpModule::free(ring, r);
    if (static_cast<std::int64_t>(fr.size()) <= bound) continue;
    for (const auto &m : mods) mono ? consider(m, fr, true) : consider(fr, m, true);
  }
  return out;
}

/// Every f: A -> e is g * i for some g: B -> e.
auto brute_injective(const FpModule &e, const std::vector<ModuleMap> &monos) -> bool {
  for (const auto &i : monos) {
    std::set<oracle::Vec64> reached;
    for (const auto &g : oracle::all_maps(i.target(), e)) reached.insert(key(g * i));
    if (reached.size() != oracle::all_maps(i.source(), e).size()) return false;
  }
  return true;
}

/// Every h: p -> B is q * g for some g: p -> A.
auto brute_projective(const FpModule &p, const std::vector<ModuleMap> &epis) -> bool {
  for (const auto &q : epis) {
    std::set<oracle::Vec64> reached;
    for (const auto &g : oracle::all_maps(p, q.source())) reached.insert(key(q * g));
    if (reached.size() != oracle::all_maps(p, q.target()).size()) return false;
  }
  return true;
}

auto tiny(const Complex &c) -> ComplexUniverse { return {ModuleUniverse{Z4, 4}, c.lo() - 1, c.hi() + 1, 2, 4, {}}; }

} // namespace

TEST(ModuleChecks, SpecExamples) {
  ModuleUniverse u{Z4, 8};
  EXPECT_TRUE(x_injective_module(M4, XClassSpec::all(), u).holds());
  auto v = x_injective_module(M2, XClassSpec::all(), u);
  ASSERT_EQ(v.status, Status::Fails);
  ASSERT_TRUE(v.counterexample);
  EXPECT_TRUE(v.counterexample_confirmed);
  const auto &i = v.counterexample->maps[0];
  const auto &f = v.counterexample->maps[1];
  EXPECT_EQ(i.source(), M2);
  EXPECT_EQ(i.target(), M4);
  EXPECT_EQ(f, ModuleMap::identity(M2));
  for (const auto &e : enumerate_modules(u)) EXPECT_TRUE(x_injective_module(e, XClassSpec::zero_only(), u).holds());

  EXPECT_TRUE(x_projective_module(mod(Z4, {4, 4}), XClassSpec::annihilated_by(2), u).holds());
  auto p = x_projective_module(M2, XClassSpec::all(), u);
  ASSERT_EQ(p.status, Status::Fails);
  EXPECT_TRUE(p.counterexample_confirmed);
  EXPECT_EQ(p.counterexample->maps[0].target(), M2);
  EXPECT_EQ(p.counterexample->maps[1], ModuleMap::identity(M2));
  for (const auto &m : enumerate_modules(u)) EXPECT_TRUE(x_projective_module(m, XClassSpec::zero_only(), u).holds());
}

TEST(ModuleChecks, AgreesWithExhaustiveSearchAndExt) {
  std::vector<XClassSpec> classes{XClassSpec::all(), XClassSpec::free(), XClassSpec::annihilated_by(2),
                                  XClassSpec::annihilated_by(3), XClassSpec::zero_only()};
  for (const auto &ring : {Z4, Z9}) {
    ModuleUniverse u{ring, 8};
    for (const auto &x : classes) {
      auto monos = brute_probes(x, ring, 8, true), epis = brute_probes(x, ring, 8, false);
      for (const auto &e : enumerate_modules(ModuleUniverse{ring, 9})) {
        auto vi = x_injective_module(e, x, u);
        EXPECT_EQ(vi.holds(), brute_injective(e, monos)) << e.to_string() << " " << x.to_string();
        EXPECT_TRUE(vi.cross_check_agrees.value_or(false)) << e.to_string() << " " << x.to_string();
        auto vp = x_projective_module(e, x, u);
        EXPECT_EQ(vp.holds(), brute_projective(e, epis)) << e.to_string() << " " << x.to_string();
        EXPECT_TRUE(vp.cross_check_agrees.value_or(false)) << e.to_string() << " " << x.to_string();
      }
    }
  }
}

TEST(ModuleChecks, CertificatesRevalidate) {
  auto v = x_injective_module(mod(Z4, {4, 4}), XClassSpec::annihilated_by(2), ModuleUniverse{Z4, 8});
  ASSERT_TRUE(v.holds());
  ASSERT_FALSE(v.certificates.empty());
  EXPECT_LE(v.certificates.size(), certificate_cap);
  for (const auto &w : v.certificates) EXPECT_EQ(w.maps[2] * w.maps[0], w.maps[1]);
}

TEST(ComplexChecks, SpecExamples) {
  auto all = XClassSpec::all();
  auto d4 = disk(0, M4);
  EXPECT_TRUE(x_injective_complex(d4, all, tiny(d4)).holds());
  auto s2 = sphere(0, M2);
  auto v = x_injective_complex(s2, all, tiny(s2));
  EXPECT_EQ(v.status, Status::Fails);
  EXPECT_TRUE(v.counterexample_confirmed);
  EXPECT_TRUE(x_injective_complex(s2, XClassSpec::zero_only(), tiny(s2)).holds());

  EXPECT_TRUE(x_projective_complex(d4, XClassSpec::free(), tiny(d4)).holds());
  auto p = x_projective_complex(s2, all, tiny(s2));
  EXPECT_EQ(p.status, Status::Fails);
  EXPECT_TRUE(p.counterexample_confirmed);
  Complex z(Z4);
  EXPECT_TRUE(x_projective_complex(z, all, tiny(sphere(0, M4))).holds());
}

TEST(ComplexChecks, CounterexampleIsReal) {
  auto s2 = sphere(0, M2);
  auto v = x_injective_complex(s2, XClassSpec::all(), tiny(s2));
  ASSERT_TRUE(v.counterexample);
  const auto &phi = v.counterexample->chain_maps[0];
  const auto &f = v.counterexample->chain_maps[1];
  for (const auto &g : oracle::all_chain_maps(phi.target(), s2)) EXPECT_FALSE(g * phi == f);
}

TEST(ComplexChecks, ComponentsOfInjectiveComplexesAreInjective) {
  std::mt19937_64 rng(19);
  std::vector<XClassSpec> classes{XClassSpec::all(), XClassSpec::free(), XClassSpec::annihilated_by(2)};
  ComplexUniverse cu{ModuleUniverse{Z4, 4}, -1, 2, 2, 4, {}};
  ModuleUniverse mu{Z4, 4};
  int passing = 0;
  for (const auto &x : classes) {
    auto inj = injective_complex_probes(x, cu);
    auto proj = projective_complex_probes(x, cu);
    for (int t = 0; t < 12; ++t) {
      auto c = oracle::random_complex(rng, Z4, 0, 1 + static_cast<int>(rng() % 2), 4);
      if (x_injective_complex(c, inj).holds()) {
        ++passing;
        for (int k = c.lo(); k <= c.hi() && !c.is_zero(); ++k)
          EXPECT_TRUE(x_injective_module(c.component(k), x, mu).holds()) << c.to_string();
      }
      if (x_projective_complex(c, proj).holds()) {
        ++passing;
        for (int k = c.lo(); k <= c.hi() && !c.is_zero(); ++k)
          EXPECT_TRUE(x_projective_module(c.component(k), x, mu).holds()) << c.to_string();
      }
    }
  }
  EXPECT_GT(passing, 0);
}

TEST(Dg, SpecExamples) {
  Eps1Universe eu{ModuleUniverse{Z4, 8}, 3, true};
  auto all = XClassSpec::all();
  auto eps = enumerate_eps1(eu, all);
  EXPECT_TRUE(dg_x_injective(sphere(0, M4), all, eu, eps).holds());
  auto bad = dg_x_injective(sphere(0, M2), all, eu, eps);
  EXPECT_EQ(bad.status, Status::Fails);
  EXPECT_NE(bad.note.find("component"), std::string::npos);
  EXPECT_TRUE(dg_x_injective(Complex(Z4), all, eu, eps).holds());
  EXPECT_TRUE(dg_x_projective(sphere(0, mod(Z4, {4, 4})), all, eu, eps).holds());
  EXPECT_EQ(dg_x_projective(sphere(1, M2), all, eu, eps).status, Status::Fails);
  EXPECT_TRUE(dg_x_projective(Complex(Z4), all, eu, eps).holds());
}

TEST(Eps1Perp, SpecExamples) {
  Eps1Universe eu{ModuleUniverse{Z4, 8}, 3, true};
  auto all = XClassSpec::all();
  auto eps = enumerate_eps1(eu, all);
  EXPECT_TRUE(eps1_perp_homotopy(sphere(0, M4), "u", eps).holds());
  EXPECT_TRUE(eps1_perp_homotopy(Complex(Z4), "u", eps).holds());
  auto v = eps1_perp_homotopy(sphere(0, M2), "u", eps);
  ASSERT_EQ(v.status, Status::Fails);
  EXPECT_TRUE(v.counterexample_confirmed);
  EXPECT_FALSE(oracle::homotopic_to_zero(v.counterexample->chain_maps[0]));
}

TEST(Eps1Perp, ImpliesHomExactness) {
  Eps1Universe eu{ModuleUniverse{Z4, 8}, 3, true};
  auto all = XClassSpec::all();
  auto eps = enumerate_eps1(eu, all);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    auto c = oracle::random_complex(rng, Z4, -1, 1 + static_cast<int>(rng() % 2), 4);
    if (!eps1_perp_homotopy(c, "u", eps).holds()) continue;
    for (const auto &e : eps)
      for (int s = -3; s <= 3; ++s) EXPECT_TRUE(is_exact(hom_complex(shift(e, s), c)).exact) << c.to_string();
    for (int k = c.lo(); k <= c.hi() && !c.is_zero(); ++k)
      EXPECT_TRUE(x_injective_module(c.component(k), all, eu.base).holds()) << c.to_string();
  }
}

TEST(HomExactness, SpecExamples) {
  auto all = XClassSpec::all();
  auto two = ModuleMap(M4, M4, IntMatrix{{2}});
  auto d4 = disk(0, M4);
  auto mono = hom_exactness(ModuleMap::zero(mod(Z4, {}), M4), ModuleMap::identity(M4), d4, Side::Left, all);
  EXPECT_TRUE(mono.holds());
  EXPECT_TRUE(hom_exactness(two, two, d4, Side::Left, all).holds());
  EXPECT_TRUE(hom_exactness(two, two, d4, Side::Right, all).holds());
  auto zero_row = hom_exactness(ModuleMap::zero(M4, M2), ModuleMap::zero(M2, mod(Z4, {})), d4, Side::Left, all);
  EXPECT_EQ(zero_row.status, Status::HypothesisNotEstablished);
  EXPECT_TRUE(hom_exactness(ModuleMap::zero(mod(Z4, {}), mod(Z4, {})), ModuleMap::zero(mod(Z4, {}), mod(Z4, {})),
                            d4, Side::Left, all)
                  .holds());
  EXPECT_EQ(hom_exactness(two, two, d4, Side::Left, XClassSpec::zero_only()).status,
            Status::HypothesisNotEstablished);
}

TEST(HomExactness, ProbeMembershipChecked) {
  auto all = XClassSpec::all();
  auto two = ModuleMap(M4, M4, IntMatrix{{2}});
  auto s2 = sphere(0, M2);
  auto ps = projective_complex_probes(all, tiny(s2));
  auto v = hom_exactness(two, two, s2, Side::Left, all, &ps);
  EXPECT_EQ(v.status, Status::HypothesisNotEstablished);
  auto d4 = disk(0, M4);
  auto ps4 = projective_complex_probes(all, tiny(d4));
  EXPECT_TRUE(hom_exactness(two, two, d4, Side::Left, all, &ps4).holds());
}

TEST(NullMap, SpecExamples) {
  auto fr = XClassSpec::free();
  auto d = disk(0, M4), s = sphere(0, M4);
  auto ps = projective_complex_probes(fr, tiny(d));
  for (const auto &f : oracle::all_chain_maps(d, s)) {
    auto v = null_map_property(f, Direction::FromProjective, fr, ps);
    ASSERT_TRUE(v.holds()) << v.note;
    ASSERT_FALSE(v.certificates.empty());
    EXPECT_TRUE(v.certificates[0].homotopy->verify());
  }
  auto z = null_map_property(ChainMap::zero(d, s), Direction::FromProjective, fr, ps);
  ASSERT_TRUE(z.holds());
  EXPECT_TRUE(z.certificates[0].homotopy->verify());

  // sphere(0, Z/4) is not x-injective for the free class: the probe
  // Z/4 -> Z/4 + Z/4 with free cokernel gives a chain map with no extension.
  auto ips = injective_complex_probes(fr, tiny(s));
  auto refused = null_map_property(ChainMap::identity(s), Direction::ToInjective, fr, ips);
  EXPECT_EQ(refused.status, Status::HypothesisNotEstablished);

  auto t = disk(0, M4);
  auto tps = injective_complex_probes(fr, tiny(t));
  for (const auto &src : {sphere(0, M4), disk(-1, M4), sphere(1, M4)})
    for (const auto &f : oracle::all_chain_maps(src, t)) {
      auto v = null_map_property(f, Direction::ToInjective, fr, tps);
      ASSERT_TRUE(v.holds()) << v.note;
      EXPECT_TRUE(v.certificates[0].homotopy->verify());
    }
}

TEST(NullMap, RefusesWithoutHypotheses) {
  auto all = XClassSpec::all();
  auto s2 = sphere(0, M2);
  auto f = ChainMap::identity(s2);
  EXPECT_EQ(null_map_property(f, Direction::FromProjective, all, ModuleUniverse{Z4, 4}).status,
            Status::HypothesisNotEstablished);
  EXPECT_EQ(null_map_property(f, Direction::ToInjective, XClassSpec::free(), ModuleUniverse{Z4, 4}).status,
            Status::HypothesisNotEstablished);
}

TEST(SummandRetraction, SpecExamples) {
  auto all = XClassSpec::all();
  auto d4 = disk(0, M4);
  ModuleUniverse u{Z4, 4};
  auto r = summand_retraction(d4, d4, ChainMap::identity(d4), all, u);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, ChainMap::identity(d4));

  auto sum = direct_sum(Z4, {d4, sphere(1, M2)});
  auto r2 = summand_retraction(d4, sum.complex, sum.injections[0], all, u);
  ASSERT_TRUE(r2);
  EXPECT_EQ(*r2 * sum.injections[0], ChainMap::identity(d4));

  Complex z(Z4);
  auto r3 = summand_retraction(z, d4, ChainMap::zero(z, d4), all, u);
  ASSERT_TRUE(r3);
  EXPECT_TRUE(r3->is_zero());

  auto s2 = sphere(0, M2);
  auto i = ChainMap(s2, sphere(0, M4), {{0, ModuleMap(M2, M4, IntMatrix{{2}})}});
  EXPECT_THROW(summand_retraction(s2, sphere(0, M4), i, all, u), HypothesisNotEstablished);
}
