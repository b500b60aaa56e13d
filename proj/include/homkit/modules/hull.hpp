#pragma once

#include "homkit/modules/fp_module.hpp"
#include "homkit/modules/normalize.hpp"

namespace homkit {

struct InjectiveHull {
  FpModule module;
  ModuleMap embedding;
};

/// Injective hull over the self-injective ring Z/n: each summand Z/d embeds
/// into the sum over p | d of Z/p^{v_p(n)}.
inline auto injective_hull(const FpModule &m) -> InjectiveHull {
  const RingSpec &ring = m.ring();
  if (!ring.is_modular()) throw std::invalid_argument("injective hulls are only available over Z/n");
  std::int64_t n = ring.modulus();
  std::vector<Integer> raw;
  std::vector<std::pair<std::size_t, Integer>> entries;  // (source column, scale)
  for (std::size_t j = 0; j < m.rank(); ++j) {
    std::int64_t d = m.factor(j).get_si();
    for (auto p : prime_factors(d)) {
      int a = valuation(n, p);
      raw.push_back(from_int64(ipow(p, a)));
      entries.emplace_back(j, from_int64(ipow(p, a - valuation(d, p))));
    }
  }
  IntMatrix rel(raw.size(), raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) rel(k, k) = raw[k];
  auto nz = normalize_presentation(ring, raw.size(), rel);
  IntMatrix emb(raw.size(), m.rank());
  for (std::size_t k = 0; k < raw.size(); ++k) emb(k, entries[k].first) = entries[k].second;
  return {nz.module, ModuleMap::trusted(m, nz.module, nz.to_canonical * emb)};
}

} // namespace homkit
