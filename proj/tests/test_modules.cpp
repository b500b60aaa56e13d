#include "module_oracle.hpp"

#include "homkit/modules.hpp"

#include <gtest/gtest.h>

using namespace homkit;

namespace {

const RingSpec Z4 = RingSpec::integers_mod(4);
const RingSpec ZZ = RingSpec::integers();

auto mod(const RingSpec &r, std::vector<Integer> f) -> FpModule { return FpModule::from_factors(r, std::move(f)); }

auto random_map(std::mt19937_64 &rng, const FpModule &s, const FpModule &t) -> ModuleMap {
  return oracle::random_map(rng, s, t);
}

} // namespace

TEST(FpModule, CanonicalFormIsEnforced) {
  EXPECT_THROW(mod(Z4, {4, 2}), std::invalid_argument);
  EXPECT_THROW(mod(Z4, {3}), std::invalid_argument);
  EXPECT_THROW(mod(ZZ, {1}), std::invalid_argument);
  EXPECT_EQ(FpModule::cyclic(Z4, 6), mod(Z4, {2}));
  EXPECT_TRUE(FpModule::cyclic(Z4, 3).is_zero());
  EXPECT_EQ(mod(Z4, {2, 4}).size(), 8u);
  EXPECT_FALSE(mod(ZZ, {2, 0}).is_finite());
  EXPECT_THROW(ModuleMap(mod(Z4, {2}), mod(Z4, {4}), IntMatrix{{1}}), std::invalid_argument);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_presentation(ZZ, 1, IntMatrix{{2}}).module, mod(ZZ, {2}));
  EXPECT_EQ(normalize_presentation(ZZ, 2, IntMatrix{{2, 0}, {0, 3}}).module, mod(ZZ, {6}));
  EXPECT_EQ(normalize_presentation(Z4, 2, IntMatrix(2, 0)).module, mod(Z4, {4, 4}));
}

TEST(Normalize, ChangeOfBasisIsInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    RingSpec ring = trial % 2 ? RingSpec::integers_mod(12) : ZZ;
    std::size_t g = 1 + rng() % 4, r = rng() % 4;
    IntMatrix rel = oracle::random_matrix(rng, g, r, 0, 11);
    auto nz = normalize_presentation(ring, g, rel);
    IntMatrix pq = reduce_rows(nz.module, nz.to_canonical * nz.from_canonical);
    ASSERT_EQ(pq, IntMatrix::identity(nz.module.rank()));
    // relations map to zero in canonical coordinates
    IntMatrix pr = reduce_rows(nz.module, nz.to_canonical * rel);
    ASSERT_TRUE(pr.is_zero());
    // Q*P - I sends every presentation generator into the relation span
    IntMatrix qp = nz.from_canonical * nz.to_canonical - IntMatrix::identity(g);
    for (std::size_t j = 0; j < g; ++j) {
      IntMatrix rhs = IntMatrix::from_columns(g, {qp.col(j)});
      ASSERT_TRUE(solve_linear(rel, rhs, ring).has_value());
    }
  }
}

TEST(Kernel, Examples) {
  FpModule m = mod(Z4, {4});
  ModuleMap two(m, m, IntMatrix{{2}});
  auto k = kernel(two);
  EXPECT_EQ(k.sub, mod(Z4, {2}));
  EXPECT_EQ(k.inclusion.matrix(), (IntMatrix{{2}}));
  EXPECT_TRUE(kernel(ModuleMap::identity(m)).sub.is_zero());
  EXPECT_EQ(cokernel(two).module, mod(Z4, {2}));
  EXPECT_EQ(image(two).sub, mod(Z4, {2}));
}

TEST(Kernel, AgreesWithEnumeration) {
  std::mt19937_64 rng(21);
  auto mods = oracle::modules_up_to(RingSpec::integers_mod(4), 16);
  auto mods6 = oracle::modules_up_to(RingSpec::integers_mod(6), 36);
  mods.insert(mods.end(), mods6.begin(), mods6.end());
  for (int trial = 0; trial < 300; ++trial) {
    const FpModule &s = mods[rng() % mods.size()];
    std::vector<FpModule> same;
    for (const auto &t : mods)
      if (t.ring() == s.ring()) same.push_back(t);
    const FpModule &t = same[rng() % same.size()];
    ModuleMap f = random_map(rng, s, t);
    auto k = kernel(f);
    auto im = image(f);
    auto brute_k = oracle::kernel_of(f);
    auto brute_im = oracle::image_of(f);
    ASSERT_EQ(k.sub.size(), brute_k.size());
    ASSERT_EQ(im.sub.size(), brute_im.size());
    ASSERT_TRUE(oracle::injective(k.inclusion));
    ASSERT_TRUE((f * k.inclusion).is_zero());
    ASSERT_EQ(oracle::image_of(k.inclusion), brute_k);
    ASSERT_EQ(oracle::image_of(im.inclusion), brute_im);
    auto c = cokernel(f);
    ASSERT_EQ(c.module.size() * brute_im.size(), t.size());
    ASSERT_TRUE((c.projection * f).is_zero());
    ASSERT_TRUE(oracle::surjective(c.projection));
    ASSERT_TRUE((k.quotient_map * k.inclusion).is_zero());
    ASSERT_EQ(is_mono(f), brute_k.size() == 1);
    ASSERT_EQ(is_epi(f), brute_im.size() == t.size());
  }
}

TEST(Kernel, OverIntegers) {
  FpModule z = FpModule::free(ZZ, 1);
  ModuleMap two(z, z, IntMatrix{{2}});
  EXPECT_TRUE(kernel(two).sub.is_zero());
  EXPECT_EQ(cokernel(two).module, mod(ZZ, {2}));
  FpModule m = mod(ZZ, {2, 0});
  ModuleMap p(m, z, IntMatrix{{0, 3}});
  EXPECT_EQ(kernel(p).sub, mod(ZZ, {2}));
  EXPECT_EQ(cokernel(p).module, mod(ZZ, {3}));
}

TEST(DirectSum, Examples) {
  EXPECT_TRUE(direct_sum(Z4, {}).module.is_zero());
  EXPECT_EQ(direct_sum(Z4, {mod(Z4, {2}), mod(Z4, {4})}).module, mod(Z4, {2, 4}));
  EXPECT_EQ(direct_sum(Z4, {mod(Z4, {2}), mod(Z4, {2})}).module, mod(Z4, {2, 2}));
  EXPECT_EQ(direct_sum(RingSpec::integers_mod(6), {mod(RingSpec::integers_mod(6), {2}), mod(RingSpec::integers_mod(6), {3})}).module,
            mod(RingSpec::integers_mod(6), {6}));
  EXPECT_THROW(direct_sum(Z4, {mod(ZZ, {2})}), std::invalid_argument);
}

TEST(DirectSum, Identities) {
  auto mods = oracle::modules_up_to(RingSpec::integers_mod(12), 24);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FpModule> ms;
    std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) ms.push_back(mods[rng() % mods.size()]);
    auto s = direct_sum(RingSpec::integers_mod(12), ms);
    ModuleMap total = ModuleMap::zero(s.module, s.module);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        ModuleMap pij = s.projections[i] * s.injections[j];
        ASSERT_EQ(pij, i == j ? ModuleMap::identity(ms[i]) : ModuleMap::zero(ms[j], ms[i]));
      }
      total = total + s.injections[i] * s.projections[i];
    }
    ASSERT_EQ(total, ModuleMap::identity(s.module));
  }
}

TEST(Pushout, Examples) {
  FpModule z2 = mod(Z4, {2}), z4 = mod(Z4, {4});
  ModuleMap incl(z2, z4, IntMatrix{{2}});
  auto p = pushout(ModuleMap::identity(z2), incl);
  EXPECT_EQ(p.module.size(), 4u);
  EXPECT_EQ(p.module, z4);
  auto p0 = pushout(ModuleMap::zero(z2, z2), incl);
  EXPECT_EQ(p0.module, direct_sum(Z4, {z2, cokernel(incl).module}).module);
  EXPECT_THROW(pushout(ModuleMap::identity(z4), ModuleMap(z4, z4, IntMatrix{{2}})), std::invalid_argument);
}

TEST(Pushout, UniversalPropertyByBruteForce) {
  auto mods = oracle::modules_up_to(Z4, 8);
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 25; ++trial) {
    const FpModule &s = mods[rng() % mods.size()];
    const FpModule &t = mods[rng() % mods.size()];
    const FpModule &b = mods[rng() % mods.size()];
    std::vector<ModuleMap> monos;
    for (auto &f : oracle::all_maps(s, b))
      if (oracle::injective(f)) monos.push_back(f);
    if (monos.empty()) continue;
    ModuleMap iota = monos[rng() % monos.size()];
    ModuleMap alpha = random_map(rng, s, t);
    auto p = pushout(alpha, iota);
    ASSERT_EQ(p.from_alpha_target * alpha, p.from_iota_target * iota);
    ASSERT_TRUE(oracle::injective(p.from_alpha_target));
    const FpModule &z = mods[rng() % mods.size()];
    auto us = oracle::all_maps(t, z), vs = oracle::all_maps(b, z), ws = oracle::all_maps(p.module, z);
    for (const auto &u : us)
      for (const auto &v : vs) {
        if (!(u * alpha == v * iota)) continue;
        int factorizations = 0;
        for (const auto &w : ws)
          if (w * p.from_alpha_target == u && w * p.from_iota_target == v) ++factorizations;
        ASSERT_EQ(factorizations, 1);
      }
    ++tested;
  }
  EXPECT_GE(tested, 25);
}

TEST(Hom, Examples) {
  EXPECT_EQ(hom_module(mod(Z4, {2}), mod(Z4, {4})).module(), mod(Z4, {2}));
  EXPECT_TRUE(hom_module(FpModule::zero(Z4), mod(Z4, {4})).module().is_zero());
  EXPECT_EQ(hom_module(mod(Z4, {4}), mod(Z4, {4})).module(), mod(Z4, {4}));
  EXPECT_TRUE(hom_module(mod(ZZ, {2}), FpModule::free(ZZ, 1)).module().is_zero());
  EXPECT_EQ(hom_module(FpModule::free(ZZ, 1), mod(ZZ, {3})).module(), mod(ZZ, {3}));
}

TEST(Hom, CodecRoundTripAndCount) {
  auto mods = oracle::modules_up_to(RingSpec::integers_mod(4), 16);
  auto m6 = oracle::modules_up_to(RingSpec::integers_mod(6), 12);
  for (const auto &a : mods)
    for (const auto &b : mods) {
      if (a.size() * b.size() > 64) continue;
      HomModule h(a, b);
      auto maps = oracle::all_maps(a, b);
      ASSERT_EQ(h.module().size(), maps.size()) << a.to_string() << " -> " << b.to_string();
      std::set<oracle::Vec64> codes;
      for (const auto &f : maps) {
        Element e = h.encode(f);
        ASSERT_EQ(h.decode(e), f);
        codes.insert(oracle::key(e));
      }
      ASSERT_EQ(codes.size(), maps.size());
      // encoding is additive
      for (std::size_t i = 0; i < std::min<std::size_t>(maps.size(), 6); ++i)
        for (std::size_t j = 0; j < std::min<std::size_t>(maps.size(), 6); ++j) {
          Element s = h.encode(maps[i]);
          Element t = h.encode(maps[j]);
          for (std::size_t k = 0; k < s.size(); ++k) s[k] += t[k];
          ASSERT_EQ(h.decode(h.module().reduce(s)), maps[i] + maps[j]);
        }
    }
  for (const auto &a : m6)
    for (const auto &b : m6) ASSERT_EQ(HomModule(a, b).module().size(), oracle::all_maps(a, b).size());
}

TEST(Ext, Examples) {
  EXPECT_EQ(ext1_module(mod(Z4, {2}), mod(Z4, {2})), mod(Z4, {2}));
  EXPECT_TRUE(ext1_module(FpModule::free(Z4, 2), mod(Z4, {2})).is_zero());
  EXPECT_TRUE(ext1_module(mod(ZZ, {2}), mod(ZZ, {3})).is_zero());
  EXPECT_EQ(ext1_module(mod(ZZ, {2}), mod(ZZ, {4})), mod(ZZ, {2}));
  EXPECT_EQ(ext1_module(mod(ZZ, {6}), FpModule::free(ZZ, 1)), mod(ZZ, {6}));
  // Z/4 is self-injective
  for (const auto &m : oracle::modules_up_to(Z4, 16)) EXPECT_TRUE(ext1_module(m, mod(Z4, {4})).is_zero());
}

TEST(Ext, IndependentOfPresentation) {
  std::mt19937_64 rng(41);
  std::vector<RingSpec> rings{Z4, RingSpec::integers_mod(9), RingSpec::integers_mod(12)};
  for (int trial = 0; trial < 80; ++trial) {
    RingSpec ring = rings[rng() % rings.size()];
    auto mods = oracle::modules_up_to(ring, 16);
    const FpModule &m = mods[rng() % mods.size()];
    const FpModule &n = mods[rng() % mods.size()];
    // a larger free presentation: extra generators hit random elements
    std::size_t extra = 1 + rng() % 2;
    FpModule f = FpModule::free(ring, m.rank() + extra);
    IntMatrix pm(m.rank(), m.rank() + extra);
    for (std::size_t i = 0; i < m.rank(); ++i) pm(i, i) = 1;
    for (std::size_t j = m.rank(); j < m.rank() + extra; ++j)
      for (std::size_t i = 0; i < m.rank(); ++i) pm(i, j) = static_cast<long>(rng() % 12);
    // shuffle by an invertible column operation
    if (m.rank() > 0) for (std::size_t j = m.rank(); j < m.rank() + extra; ++j)
      for (std::size_t i = 0; i < m.rank(); ++i) pm(i, i) += pm(i, j);
    ModuleMap pi(f, m, pm);
    if (!is_epi(pi)) continue;
    ASSERT_EQ(ext1_via(pi, n), ext1_module(m, n)) << m.to_string() << " " << n.to_string();
  }
}

TEST(Hull, Examples) {
  auto h = injective_hull(mod(Z4, {2}));
  EXPECT_EQ(h.module, mod(Z4, {4}));
  EXPECT_EQ(h.embedding.matrix(), (IntMatrix{{2}}));
  auto f = injective_hull(FpModule::free(Z4, 2));
  EXPECT_EQ(f.module, FpModule::free(Z4, 2));
  EXPECT_EQ(f.embedding, ModuleMap::identity(f.module));
  RingSpec z12 = RingSpec::integers_mod(12);
  EXPECT_EQ(injective_hull(mod(z12, {2})).module, mod(z12, {4}));
  EXPECT_EQ(injective_hull(mod(z12, {6})).module, mod(z12, {12}));
  EXPECT_THROW(injective_hull(mod(ZZ, {2})), std::invalid_argument);
}

TEST(Hull, EssentialMonoIntoInjective) {
  for (RingSpec ring : {Z4, RingSpec::integers_mod(8), RingSpec::integers_mod(12), RingSpec::integers_mod(18)}) {
    for (const auto &m : oracle::modules_up_to(ring, 36)) {
      auto h = injective_hull(m);
      if (h.module.size() > 512) continue;
      ASSERT_TRUE(oracle::injective(h.embedding));
      auto im = oracle::image_of(h.embedding);
      FiniteModule fe(h.module);
      for (std::size_t x = 1; x < fe.size(); ++x) {
        Bits cyc = fe.span({x});
        bool meets = false;
        for (auto y : cyc.members())
          if (y != 0 && im.count(oracle::key(fe.element(y)))) meets = true;
        ASSERT_TRUE(meets) << m.to_string();
      }
      for (const auto &q : oracle::modules_up_to(ring, 12)) ASSERT_TRUE(ext1_module(q, h.module).is_zero());
    }
  }
}

TEST(Finite, SubmoduleCounts) {
  // (Z/2)^3 has 16 subgroups; Z/4 + Z/2 has 8; Z/4 + Z/4 has 15.
  EXPECT_EQ(FiniteModule(mod(Z4, {2, 2})).submodules().size(), 5u);
  EXPECT_EQ(FiniteModule(mod(RingSpec::integers_mod(2), {2, 2, 2})).submodules().size(), 16u);
  EXPECT_EQ(FiniteModule(mod(Z4, {2, 4})).submodules().size(), 8u);
  EXPECT_EQ(FiniteModule(mod(Z4, {4, 4})).submodules().size(), 15u);
}
