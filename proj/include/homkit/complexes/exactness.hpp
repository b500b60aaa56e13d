#pragma once

#include "homkit/complexes/complex.hpp"

namespace homkit {

struct ExactnessReport {
  bool exact = true;
  std::optional<int> first_nonexact;
  /// Nonzero homology modules by degree.
  std::map<int, FpModule> homology;
};

/// H^k = ker d^k / im d^{k-1}, computed as the image of ker d^k in coker d^{k-1}.
inline auto homology(const Complex &c, int k) -> FpModule {
  auto ker = kernel(c.differential(k));
  auto q = cokernel(c.differential(k - 1));
  return image(q.projection * ker.inclusion).sub;
}

inline auto is_exact(const Complex &c) -> ExactnessReport {
  ExactnessReport r;
  for (int k = c.lo(); k <= c.hi(); ++k) {
    FpModule h = homology(c, k);
    if (h.is_zero()) continue;
    if (r.exact) r.first_nonexact = k;
    r.exact = false;
    r.homology.emplace(k, h);
  }
  return r;
}

} // namespace homkit
