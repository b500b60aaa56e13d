#pragma once

#include "homkit/complexes/complex.hpp"

namespace homkit {

struct MappingCone {
  Complex complex;
  /// 0 -> target -> cone -> source[1] -> 0.
  ShortExactOfComplexes sequence;
  /// Degree k sum source^{k+1} + target^k.
  std::map<int, DirectSum> sums;
};

/// Cone of f: X -> Y with M^k = X^{k+1} + Y^k and d = [[-d_X, 0], [f, d_Y]].
inline auto mapping_cone(const ChainMap &f) -> MappingCone {
  const Complex &x = f.source(), &y = f.target();
  const RingSpec &ring = y.ring();
  Complex x1 = shift(x, 1);
  auto [lo, hi] = joint_range(x1, y);
  MappingCone out;
  std::map<int, FpModule> comps;
  for (int k = lo; k <= hi; ++k) {
    out.sums.emplace(k, direct_sum(ring, {x.component(k + 1), y.component(k)}));
    comps.emplace(k, out.sums.at(k).module);
  }
  std::map<int, IntMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    const auto &a = out.sums.at(k), &b = out.sums.at(k + 1);
    ModuleMap d = b.injections[0] * (-x.differential(k + 1)) * a.projections[0] +
                  b.injections[1] * f.component(k + 1) * a.projections[0] +
                  b.injections[1] * y.differential(k) * a.projections[1];
    diffs.emplace(k, d.matrix());
  }
  out.complex = Complex::from_maps(ring, comps, diffs);
  std::map<int, ModuleMap> inj, surj;
  for (int k = lo; k <= hi; ++k) {
    const auto &s = out.sums.at(k);
    inj.emplace(k, ModuleMap::trusted(y.component(k), out.complex.component(k), s.injections[1].matrix()));
    surj.emplace(k, ModuleMap::trusted(out.complex.component(k), x1.component(k), s.projections[0].matrix()));
  }
  out.sequence = {y, out.complex, x1, ChainMap(y, out.complex, inj), ChainMap(out.complex, x1, surj)};
  return out;
}

} // namespace homkit
