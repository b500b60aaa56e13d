#pragma once

#include "homkit/modules/fp_module.hpp"
#include "homkit/modules/normalize.hpp"

#include <optional>
#include <vector>

namespace homkit {

/// A submodule with its inclusion, together with the quotient of the ambient
/// module by it.
struct SubquotientWitness {
  FpModule ambient;
  FpModule sub;
  ModuleMap inclusion;
  ModuleMap quotient_map;
  FpModule quotient;
};

struct Cokernel {
  FpModule module;
  ModuleMap projection;
  /// Column j: a preimage in the target of canonical generator j.
  IntMatrix section;
};

struct Submodule {
  FpModule module;
  ModuleMap inclusion;
};

/// Generators of {x : sum_j x_j g_j = 0 in the ambient module}.
inline auto relation_module(const FpModule &ambient, const std::vector<Element> &gens)
    -> std::vector<Vector> {
  const RingSpec &ring = ambient.ring();
  LinearSystem sys(ring);
  for (std::size_t j = 0; j < gens.size(); ++j) sys.add_variable(ring.free_factor());
  for (std::size_t i = 0; i < ambient.rank(); ++i) {
    std::vector<std::pair<std::size_t, Integer>> terms;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (gens[j][i] != 0) terms.emplace_back(j, gens[j][i]);
    sys.add_equation(std::move(terms), 0, ambient.factor(i));
  }
  return sys.kernel();
}

inline auto submodule_generated(const FpModule &ambient, const std::vector<Element> &gens)
    -> Submodule {
  const RingSpec &ring = ambient.ring();
  auto rel = relation_module(ambient, gens);
  auto nz = normalize_presentation(ring, gens.size(), IntMatrix::from_columns(gens.size(), rel));
  IntMatrix g = IntMatrix::from_columns(ambient.rank(), gens);
  return {nz.module, ModuleMap::trusted(nz.module, ambient, g * nz.from_canonical)};
}

inline auto cokernel(const ModuleMap &f) -> Cokernel {
  const FpModule &t = f.target();
  IntMatrix rel(t.rank(), t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i) rel(i, i) = t.factor(i);
  auto nz = normalize_presentation(t.ring(), t.rank(), hstack(rel, f.matrix()));
  return {nz.module, ModuleMap::trusted(t, nz.module, nz.to_canonical), nz.from_canonical};
}

inline auto subquotient(const FpModule &ambient, const Submodule &s) -> SubquotientWitness {
  auto q = cokernel(s.inclusion);
  return {ambient, s.module, s.inclusion, q.projection, q.module};
}

inline auto kernel_elements(const ModuleMap &f) -> std::vector<Element> {
  const FpModule &s = f.source(), &t = f.target();
  LinearSystem sys(s.ring());
  for (std::size_t j = 0; j < s.rank(); ++j) sys.add_variable(s.factor(j));
  for (std::size_t i = 0; i < t.rank(); ++i) {
    std::vector<std::pair<std::size_t, Integer>> terms;
    for (std::size_t j = 0; j < s.rank(); ++j)
      if (f.matrix()(i, j) != 0) terms.emplace_back(j, f.matrix()(i, j));
    sys.add_equation(std::move(terms), 0, t.factor(i));
  }
  return sys.kernel();
}

/// Some y with f(y) = x, if one exists.
inline auto preimage(const ModuleMap &f, const Element &x) -> std::optional<Element> {
  const FpModule &s = f.source(), &t = f.target();
  LinearSystem sys(s.ring());
  for (std::size_t j = 0; j < s.rank(); ++j) sys.add_variable(s.factor(j));
  for (std::size_t i = 0; i < t.rank(); ++i) {
    std::vector<std::pair<std::size_t, Integer>> terms;
    for (std::size_t j = 0; j < s.rank(); ++j)
      if (f.matrix()(i, j) != 0) terms.emplace_back(j, f.matrix()(i, j));
    sys.add_equation(std::move(terms), x[i], t.factor(i));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return s.reduce(sol->particular);
}

inline auto kernel(const ModuleMap &f) -> SubquotientWitness {
  return subquotient(f.source(), submodule_generated(f.source(), kernel_elements(f)));
}

inline auto image(const ModuleMap &f) -> SubquotientWitness {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < f.source().rank(); ++j) cols.push_back(f.matrix().col(j));
  return subquotient(f.target(), submodule_generated(f.target(), cols));
}

inline auto is_mono(const ModuleMap &f) -> bool { return kernel_elements(f).empty(); }
inline auto is_epi(const ModuleMap &f) -> bool { return cokernel(f).module.is_zero(); }

struct DirectSum {
  FpModule module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

inline auto direct_sum(const RingSpec &ring, const std::vector<FpModule> &ms) -> DirectSum {
  std::size_t g = 0;
  for (const auto &m : ms) {
    if (!(m.ring() == ring)) throw std::invalid_argument("direct sum of modules over different rings");
    g += m.rank();
  }
  IntMatrix rel(g, g);
  std::size_t off = 0;
  for (const auto &m : ms)
    for (std::size_t i = 0; i < m.rank(); ++i, ++off) rel(off, off) = m.factor(i);
  auto nz = normalize_presentation(ring, g, rel);
  DirectSum out{nz.module, {}, {}};
  off = 0;
  for (const auto &m : ms) {
    out.injections.push_back(ModuleMap::trusted(m, nz.module, nz.to_canonical.block(0, off, nz.module.rank(), m.rank())));
    out.projections.push_back(ModuleMap::trusted(nz.module, m, nz.from_canonical.block(off, 0, m.rank(), nz.module.rank())));
    off += m.rank();
  }
  return out;
}

inline auto direct_sum(const std::vector<FpModule> &ms) -> DirectSum {
  if (ms.empty()) throw std::invalid_argument("direct sum of an empty list needs a ring");
  return direct_sum(ms.front().ring(), ms);
}

/// The map into a direct sum with the given components.
inline auto into_sum(const DirectSum &sum, const std::vector<ModuleMap> &components) -> ModuleMap {
  if (components.empty()) throw std::invalid_argument("into_sum needs components");
  ModuleMap acc = sum.injections[0] * components[0];
  for (std::size_t i = 1; i < components.size(); ++i) acc = acc + sum.injections[i] * components[i];
  return acc;
}

/// The map out of a direct sum with the given components.
inline auto out_of_sum(const DirectSum &sum, const std::vector<ModuleMap> &components) -> ModuleMap {
  if (components.empty()) throw std::invalid_argument("out_of_sum needs components");
  ModuleMap acc = components[0] * sum.projections[0];
  for (std::size_t i = 1; i < components.size(); ++i) acc = acc + components[i] * sum.projections[i];
  return acc;
}

struct Pushout {
  FpModule module;
  ModuleMap from_alpha_target;
  ModuleMap from_iota_target;
  /// Relations in target(alpha) + target(iota): the pairs (alpha(s), -iota(s))
  /// over the generators s of the common source.
  IntMatrix relations;
  DirectSum sum;
};

/// Pushout of alpha: S -> T and iota: S -> B (iota mono).
inline auto pushout(const ModuleMap &alpha, const ModuleMap &iota) -> Pushout {
  if (!(alpha.source() == iota.source())) throw std::invalid_argument("pushout legs need a common source");
  if (!is_mono(iota)) throw std::invalid_argument("pushout: iota is not a monomorphism");
  const RingSpec &ring = alpha.source().ring();
  DirectSum sum = direct_sum(ring, {alpha.target(), iota.target()});
  ModuleMap rel = sum.injections[0] * alpha - sum.injections[1] * iota;
  Cokernel q = cokernel(rel);
  IntMatrix relations = vstack(alpha.matrix(), -iota.matrix());
  return {q.module, q.projection * sum.injections[0], q.projection * sum.injections[1],
          ring.reduce(relations), sum};
}

} // namespace homkit
