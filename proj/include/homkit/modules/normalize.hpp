#pragma once

#include "homkit/modules/fp_module.hpp"

namespace homkit {

/// Canonical form of the module R^g / (columns of the relations).
/// to_canonical maps presentation coordinates to canonical ones and
/// from_canonical sends canonical generator j to presentation coordinates.
struct Normalization {
  FpModule module;
  IntMatrix to_canonical;
  IntMatrix from_canonical;
};

inline auto normalize_presentation(const RingSpec &ring, std::size_t generators,
                                   const IntMatrix &relations) -> Normalization {
  if (relations.rows() != generators) throw std::invalid_argument("relation matrix row count differs from generator count");
  SmithForm<Integer> s = ring.is_modular() ? smith_normal_form_mod(relations, ring.modulus())
                                           : smith_normal_form(relations);
  std::vector<std::size_t> keep;
  std::vector<Integer> factors;
  std::size_t diag = std::min(relations.rows(), relations.cols());
  for (std::size_t i = 0; i < generators; ++i) {
    Integer d = i < diag ? s.d(i, i) : Integer(0);
    if (ring.is_modular() && d == 0) d = from_int64(ring.modulus());
    if (d == 1) continue;
    keep.push_back(i);
    factors.push_back(d);
  }
  Normalization out;
  out.module = FpModule::from_factors(ring, factors);
  out.to_canonical = IntMatrix(keep.size(), generators);
  out.from_canonical = IntMatrix(generators, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < generators; ++j) {
      out.to_canonical(k, j) = s.u(keep[k], j);
      out.from_canonical(j, k) = s.u_inv(j, keep[k]);
    }
  out.to_canonical = reduce_rows(out.module, out.to_canonical);
  out.from_canonical = ring.reduce(out.from_canonical);
  return out;
}

} // namespace homkit
