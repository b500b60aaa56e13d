#include "complex_oracle.hpp"

#include "homkit/complexes.hpp"

#include <gtest/gtest.h>

using namespace homkit;

namespace {

const RingSpec Z2 = RingSpec::integers_mod(2);
const RingSpec Z3 = RingSpec::integers_mod(3);
const RingSpec Z4 = RingSpec::integers_mod(4);
const RingSpec ZZ = RingSpec::integers();

auto cyc(const RingSpec &r, long d) -> FpModule { return FpModule::cyclic(r, d); }

auto chain(const RingSpec &r, int lo, std::vector<FpModule> cs, std::vector<IntMatrix> ds) -> Complex {
  std::vector<ModuleMap> maps;
  for (std::size_t i = 0; i < ds.size(); ++i) maps.emplace_back(cs[i], cs[i + 1], ds[i]);
  return {r, lo, std::move(cs), std::move(maps)};
}

/// 0 -> Z/4 -(2)-> Z/4 -> 0 in degrees 0, 1.
auto times_two() -> Complex { return chain(Z4, 0, {cyc(Z4, 4), cyc(Z4, 4)}, {IntMatrix{{2}}}); }

auto random_chain_map(std::mt19937_64 &rng, const Complex &s, const Complex &t) -> std::optional<ChainMap> {
  auto all = oracle::all_chain_maps(s, t);
  if (all.empty()) return std::nullopt;
  return all[rng() % all.size()];
}

/// A random integer combination of chain-map generators.
auto sampled_chain_map(std::mt19937_64 &rng, const Complex &s, const Complex &t) -> ChainMap {
  ChainMap f = ChainMap::zero(s, t);
  for (const auto &g : chain_map_generators(s, t)) {
    long c = static_cast<long>(rng() % 5);
    for (long i = 0; i < c; ++i) f = f + g;
  }
  return f;
}

} // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(Complex(Z4)).valid);
  EXPECT_TRUE(validate(disk(0, cyc(Z2, 2))).valid);
  auto bad = chain(Z4, 0, {cyc(Z4, 4), cyc(Z4, 4), cyc(Z4, 4)}, {IntMatrix{{1}}, IntMatrix{{1}}});
  auto r = validate(bad);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.first_violation, 1);
}

TEST(Complex, TrimsZeroEnds) {
  auto c = Complex::from_maps(Z4, {{-1, FpModule::zero(Z4)}, {0, cyc(Z4, 2)}, {2, FpModule::zero(Z4)}}, {});
  EXPECT_EQ(c.lo(), 0);
  EXPECT_EQ(c.hi(), 0);
  EXPECT_EQ(c, sphere(0, cyc(Z4, 2)));
  EXPECT_THROW(chain(Z4, 0, {cyc(Z4, 2), cyc(Z4, 4)}, {IntMatrix{{1}}}), std::invalid_argument);
}

TEST(Shift, Examples) {
  auto d = disk(0, cyc(Z4, 4));
  EXPECT_EQ(shift(d, 0), d);
  auto s = shift(sphere(0, cyc(Z4, 2)), 1);
  EXPECT_EQ(s, sphere(-1, cyc(Z4, 2)));
  auto d2 = shift(disk(0, cyc(Z2, 2)), 1);
  EXPECT_EQ(d2.lo(), -1);
  EXPECT_EQ(d2.differential(-1), ModuleMap::identity(cyc(Z2, 2)));
  EXPECT_EQ(shift(d, 1).differential(-1).matrix(), IntMatrix{{3}});
}

TEST(Shift, Involution) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto c = oracle::random_complex(rng, Z4, -1, 3, 8);
    for (int k = -3; k <= 3; ++k) {
      EXPECT_EQ(shift(shift(c, k), -k), c);
      EXPECT_TRUE(validate(shift(c, k)).valid);
    }
  }
}

TEST(DiskSphere, Examples) {
  EXPECT_TRUE(disk(0, FpModule::zero(Z4)).is_zero());
  auto d = disk(0, cyc(Z2, 2));
  EXPECT_TRUE(validate(d).valid);
  EXPECT_TRUE(is_exact(d).exact);
  auto s = is_exact(sphere(0, cyc(Z2, 2)));
  EXPECT_FALSE(s.exact);
  EXPECT_EQ(s.homology.at(0), cyc(Z2, 2));
}

TEST(Exactness, Examples) {
  auto r = is_exact(times_two());
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.first_nonexact, 0);
  EXPECT_EQ(r.homology.at(0), cyc(Z4, 2));
  EXPECT_EQ(r.homology.at(1), cyc(Z4, 2));
  EXPECT_TRUE(is_exact(disk(3, FpModule::free(ZZ, 2))).exact);
  auto zc = chain(ZZ, 0, {FpModule::free(ZZ, 1), FpModule::free(ZZ, 1)}, {IntMatrix{{6}}});
  auto zr = is_exact(zc);
  EXPECT_EQ(zr.homology.count(0), 0u);
  EXPECT_EQ(zr.homology.at(1), cyc(ZZ, 6));
}

TEST(Exactness, HomologySizesMatchEnumeration) {
  std::mt19937_64 rng(11);
  for (const auto &ring : {Z2, Z3, Z4, RingSpec::integers_mod(6)}) {
    for (int t = 0; t < 30; ++t) {
      auto c = oracle::random_complex(rng, ring, 0, 3, 16);
      auto r = is_exact(c);
      for (int k = -1; k <= 3; ++k) {
        std::size_t h = oracle::homology_size(c, k);
        std::size_t got = r.homology.count(k) ? r.homology.at(k).size() : 1;
        EXPECT_EQ(got, h) << c.to_string() << " degree " << k;
      }
    }
  }
}

TEST(DirectSum, OfComplexes) {
  auto s = direct_sum(Z4, {disk(0, cyc(Z4, 2)), sphere(1, cyc(Z4, 4))});
  EXPECT_TRUE(validate(s.complex).valid);
  EXPECT_EQ(s.complex.component(1), FpModule::from_factors(Z4, {2, 4}));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(s.injections[i].is_chain_map());
    EXPECT_TRUE(s.projections[i].is_chain_map());
    EXPECT_EQ(s.projections[i] * s.injections[i], ChainMap::identity(s.injections[i].source()));
  }
  EXPECT_TRUE((s.projections[1] * s.injections[0]).is_zero());
}

TEST(MappingCone, Examples) {
  auto x = sphere(0, cyc(Z4, 2)), y = sphere(0, cyc(Z4, 4));
  auto c0 = mapping_cone(ChainMap::zero(x, y));
  EXPECT_EQ(c0.complex, direct_sum(Z4, {shift(x, 1), y}).complex);
  auto s = sphere(0, cyc(Z2, 2));
  auto ci = mapping_cone(ChainMap::identity(s));
  EXPECT_EQ(ci.complex.total_size(), 4u);
  EXPECT_TRUE(is_exact(ci.complex).exact);
  for (int k = -2; k <= 1; ++k) EXPECT_EQ(oracle::homology_size(ci.complex, k), 1u);
  EXPECT_TRUE(mapping_cone(ChainMap::identity(Complex(Z4))).complex.is_zero());
}

TEST(MappingCone, SequenceIsShortExact) {
  std::mt19937_64 rng(5);
  for (const auto &ring : {Z2, Z3, Z4}) {
    for (int t = 0; t < 20; ++t) {
      auto a = oracle::random_complex(rng, ring, 0, 2, 8);
      auto b = oracle::random_complex(rng, ring, 0, 3, 8);
      auto f = random_chain_map(rng, a, b);
      if (!f) continue;
      auto m = mapping_cone(*f);
      EXPECT_TRUE(validate(m.complex).valid);
      EXPECT_TRUE(m.sequence.verify());
    }
  }
}

TEST(MappingCone, NaturalUnderIsomorphisms) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 25; ++t) {
    auto a = oracle::random_complex(rng, Z4, 0, 2, 8);
    auto b = oracle::random_complex(rng, Z4, 0, 2, 8);
    auto f = random_chain_map(rng, a, b);
    if (!f) continue;
    ChainMap u = -ChainMap::identity(a), v = -ChainMap::identity(b);
    auto g = v * (*f) * u;
    auto m1 = mapping_cone(*f).complex, m2 = mapping_cone(g).complex;
    for (int k = m1.lo(); k <= m1.hi(); ++k) {
      EXPECT_EQ(m1.component(k), m2.component(k));
      EXPECT_EQ(oracle::homology_size(m1, k), oracle::homology_size(m2, k));
    }
    auto pf = null_homotopy(*f).has_value(), pg = null_homotopy(g).has_value();
    EXPECT_EQ(pf, pg);
  }
}

TEST(HomComplex, Examples) {
  auto m = cyc(Z4, 2);
  auto y = chain(Z4, 0, {cyc(Z4, 4), cyc(Z4, 2)}, {IntMatrix{{1}}});
  auto h = hom_complex(sphere(0, m), y);
  for (int n = -1; n <= 2; ++n) EXPECT_EQ(h.component(n), hom_module(m, y.component(n)).module());
  EXPECT_TRUE(hom_complex(y, Complex(Z4)).is_zero());
  auto h2 = hom_complex(sphere(0, cyc(Z2, 2)), disk(0, cyc(Z2, 2)));
  auto r = is_exact(h2);
  EXPECT_EQ(r.homology.count(0), 0u);
  for (const auto &f : oracle::all_chain_maps(sphere(0, cyc(Z2, 2)), disk(0, cyc(Z2, 2))))
    EXPECT_TRUE(oracle::homotopic_to_zero(f));
}

TEST(HomComplex, CyclesBijectWithChainMaps) {
  std::mt19937_64 rng(3);
  for (const auto &ring : {Z2, Z4, RingSpec::integers_mod(6)}) {
    for (int t = 0; t < 12; ++t) {
      auto x = oracle::random_complex(rng, ring, 0, 2, 4);
      auto y = oracle::random_complex(rng, ring, -1, 3, 4);
      HomComplex hc(x, y);
      EXPECT_TRUE(validate(hc.complex()).valid);
      auto maps = oracle::all_chain_maps(x, y);
      auto cycles = oracle::kernel_of(hc.complex().differential(0));
      EXPECT_EQ(maps.size(), cycles.size());
      for (const auto &f : maps) {
        auto e = hc.element_of(f);
        EXPECT_TRUE(hc.complex().component(0).is_zero() ||
                    hc.complex().differential(0).apply(e) == hc.complex().component(1).zero_element() ||
                    hc.complex().component(1).is_zero());
        EXPECT_EQ(hc.chain_map_of(e), f);
      }
      // Boundaries of degree -1 are exactly the null-homotopic chain maps.
      auto bounds = oracle::image_of(hc.complex().differential(-1));
      std::size_t null = 0;
      for (const auto &f : maps) null += oracle::homotopic_to_zero(f) ? 1 : 0;
      EXPECT_EQ(bounds.size(), null);
    }
  }
}

TEST(NullHomotopy, Examples) {
  auto d = disk(0, cyc(Z2, 2));
  auto z = null_homotopy(ChainMap::zero(d, d));
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->verify());
  for (const auto &[k, s] : z->components) EXPECT_TRUE(s.is_zero());
  auto h = null_homotopy(ChainMap::identity(d));
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->verify());
  EXPECT_EQ(h->component(1), ModuleMap::identity(cyc(Z2, 2)));
  EXPECT_FALSE(null_homotopy(ChainMap::identity(sphere(0, cyc(Z2, 2)))));
  EXPECT_FALSE(null_homotopy(ChainMap::identity(times_two())));
}

TEST(NullHomotopy, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(21);
  for (const auto &ring : {Z2, Z3, Z4}) {
    for (int t = 0; t < 25; ++t) {
      auto a = oracle::random_complex(rng, ring, 0, 3, 4);
      auto b = oracle::random_complex(rng, ring, 0, 3, 4);
      auto f = random_chain_map(rng, a, b);
      if (!f) continue;
      auto h = null_homotopy(*f);
      EXPECT_EQ(h.has_value(), oracle::homotopic_to_zero(*f));
      if (h) {
        EXPECT_TRUE(h->verify());
      }
    }
  }
}

TEST(NullHomotopy, OverIntegers) {
  auto d = disk(0, FpModule::free(ZZ, 1));
  auto h = null_homotopy(ChainMap::identity(d));
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->verify());
  auto c = chain(ZZ, 0, {FpModule::free(ZZ, 1), FpModule::free(ZZ, 1)}, {IntMatrix{{2}}});
  EXPECT_FALSE(null_homotopy(ChainMap::identity(c)));
  auto g = ChainMap::from_matrices(c, c, {{0, IntMatrix{{2}}}, {1, IntMatrix{{2}}}});
  ASSERT_TRUE(g.is_chain_map());
  auto hg = null_homotopy(g);
  ASSERT_TRUE(hg);
  EXPECT_TRUE(hg->verify());
}

TEST(Splits, Examples) {
  auto l = disk(0, cyc(Z4, 2)), r = sphere(1, cyc(Z4, 4));
  auto s = direct_sum(Z4, {l, r});
  ShortExactOfComplexes seq{l, s.complex, r, s.injections[0], s.projections[1]};
  ASSERT_TRUE(seq.verify());
  auto ret = splits(seq);
  ASSERT_TRUE(ret);
  EXPECT_EQ(*ret * seq.inj, ChainMap::identity(l));
  EXPECT_TRUE(ret->is_chain_map());

  auto cone = mapping_cone(ChainMap::identity(sphere(0, cyc(Z2, 2))));
  EXPECT_FALSE(splits(cone.sequence));

  Complex z(Z4);
  EXPECT_TRUE(splits({z, z, z, ChainMap::zero(z, z), ChainMap::zero(z, z)}));
}

TEST(Splits, ConeSplitsIffNullHomotopic) {
  std::mt19937_64 rng(1);
  int cases = 0, null = 0;
  for (const auto &ring : {Z2, Z3, Z4}) {
    for (int t = 0; t < 60; ++t) {
      int w1 = 1 + static_cast<int>(rng() % 3), w2 = 1 + static_cast<int>(rng() % 3);
      auto a = oracle::random_complex(rng, ring, 0, w1, 16);
      auto b = oracle::random_complex(rng, ring, static_cast<int>(rng() % 2), w2, 16);
      auto f = std::optional<ChainMap>(sampled_chain_map(rng, a, b));
      EXPECT_TRUE(f->is_chain_map());
      auto m = mapping_cone(*f);
      bool split = splits(m.sequence).has_value();
      bool h = null_homotopy(*f).has_value();
      EXPECT_EQ(split, h) << f->source().to_string() << " -> " << f->target().to_string();
      ++cases;
      null += h ? 1 : 0;
    }
  }
  EXPECT_GT(cases, 100);
  EXPECT_GT(null, 0);
  EXPECT_LT(null, cases);
}

TEST(Splits, RetractionAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(8);
  for (const auto &ring : {Z2, Z4}) {
    for (int t = 0; t < 15; ++t) {
      auto a = oracle::random_complex(rng, ring, 0, 2, 4);
      auto b = oracle::random_complex(rng, ring, 0, 2, 4);
      auto f = random_chain_map(rng, a, b);
      if (!f) continue;
      auto m = mapping_cone(*f);
      bool found = false;
      for (const auto &r : oracle::all_chain_maps(m.complex, b))
        if (r * m.sequence.inj == ChainMap::identity(b)) found = true;
      EXPECT_EQ(splits(m.sequence).has_value(), found);
    }
  }
}

TEST(Subcomplex, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (const auto &ring : {Z2, Z4}) {
    for (int t = 0; t < 10; ++t) {
      auto c = oracle::random_complex(rng, ring, 0, 2, 8);
      FiniteComplex fc(c);
      std::size_t n = fc.for_each_subcomplex([&](const FiniteComplex::Selection &s) {
        EXPECT_TRUE(fc.is_closed(s));
        auto data = fc.realize(s);
        EXPECT_TRUE(validate(data.sub).valid);
        EXPECT_TRUE(validate(data.quotient).valid);
        EXPECT_TRUE(data.inclusion.is_chain_map());
        EXPECT_TRUE(data.projection.is_chain_map());
        for (int k = c.lo(); k <= c.hi(); ++k)
          EXPECT_EQ(data.sub.component(k).size() * data.quotient.component(k).size(), c.component(k).size());
        return true;
      });
      // Reference: all pairs of subgroups (as element sets) closed under d.
      std::size_t brute = 0;
      auto e0 = oracle::elements(c.component(0)), e1 = oracle::elements(c.component(1));
      std::vector<std::set<oracle::Vec64>> s0, s1;
      for (const auto &m : FiniteModule(c.component(0)).submodules()) {
        std::set<oracle::Vec64> s;
        for (auto i : m.members()) s.insert(oracle::key(e0[i]));
        s0.push_back(s);
      }
      for (const auto &m : FiniteModule(c.component(1)).submodules()) {
        std::set<oracle::Vec64> s;
        for (auto i : m.members()) s.insert(oracle::key(e1[i]));
        s1.push_back(s);
      }
      for (const auto &a : s0)
        for (const auto &b : s1) {
          bool ok = true;
          for (const auto &x : e0)
            if (a.count(oracle::key(x)) && !b.count(oracle::key(c.differential(0).apply(x)))) ok = false;
          brute += ok ? 1 : 0;
        }
      EXPECT_EQ(n, brute);
    }
  }
}

TEST(Subcomplex, DiskOverZ4) {
  FiniteComplex fc(disk(0, cyc(Z4, 4)));
  std::size_t n = fc.for_each_subcomplex([](const FiniteComplex::Selection &) { return true; });
  // Pairs A0 <= A1 among the chain 0 < 2Z/4 < Z/4.
  EXPECT_EQ(n, 6u);
}
