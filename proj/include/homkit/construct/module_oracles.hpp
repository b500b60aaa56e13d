#pragma once

#include "homkit/lifting.hpp"

#include <functional>

namespace homkit {

/// One solved (or unsolvable) system from a builder.
struct BuildRecord {
  std::string step;
  std::size_t variables = 0;
  std::size_t equations = 0;
  bool solved = false;
  std::vector<std::pair<std::string, ModuleMap>> chosen;
};

class BuildFailure : public std::runtime_error {
public:
  BuildFailure(const std::string &what, BuildRecord record, LinearSystem system)
      : std::runtime_error(what), record(std::move(record)), system(std::move(system)) {}
  BuildRecord record;
  LinearSystem system;
};

/// A per-degree module oracle invocation.
struct OracleCall {
  int degree = 0;
  FpModule input;
  FpModule output;
  std::string strategy;
};

/// q: p -> m, onto.
struct ModulePrecover {
  ModuleMap map;
  std::string strategy;
};

/// j: m -> e, into.
struct ModulePreenvelope {
  ModuleMap map;
  std::string strategy;
};

using PrecoverStrategy = std::function<ModulePrecover(const FpModule &)>;
using PreenvelopeStrategy = std::function<ModulePreenvelope(const FpModule &)>;

/// Does every map into q's target from an x-projective universe member
/// factor through q? Factorable maps form a subgroup, so generators suffice.
inline auto precover_factorization(const ModuleMap &q, const XClassSpec &x, const ModuleUniverse &u) -> bool {
  auto probes = projective_module_probes(x, u);
  for (const auto &pp : enumerate_modules(u)) {
    if (!x_projective_module(pp, x, u, probes).holds()) continue;
    HomModule from(pp, q.source()), to(pp, q.target());
    ModuleMap post = postcompose_map(q, from, to);
    for (std::size_t c = 0; c < to.module().rank(); ++c)
      if (!preimage(post, detail::unit(to.module().rank(), c))) return false;
  }
  return true;
}

/// Does every map out of j's source into an x-injective universe member
/// extend along j?
inline auto preenvelope_factorization(const ModuleMap &j, const XClassSpec &x, const ModuleUniverse &u) -> bool {
  auto probes = injective_module_probes(x, u);
  for (const auto &e : enumerate_modules(u)) {
    if (!x_injective_module(e, x, u, probes).holds()) continue;
    HomModule from(j.target(), e), to(j.source(), e);
    ModuleMap pre = precompose_map(j, from, to);
    for (std::size_t c = 0; c < to.module().rank(); ++c)
      if (!preimage(pre, detail::unit(to.module().rank(), c))) return false;
  }
  return true;
}

/// Free cover F -> m on the canonical generators.
inline auto free_cover(const FpModule &m) -> ModulePrecover { return {canonical_presentation(m), "free cover"}; }

inline auto hull_preenvelope(const FpModule &m) -> ModulePreenvelope {
  return {injective_hull(m).embedding, "injective hull"};
}

/// First universe epi p -> m, in enumeration order, with p in x, kernel in x,
/// p x-projective and the precover factorization.
inline auto search_precover(const FpModule &m, const XClassSpec &x, const ModuleUniverse &u) -> ModulePrecover {
  check_module_cap(m.size(), "precover input");
  auto probes = projective_module_probes(x, u);
  for (const auto &p : enumerate_modules(u)) {
    if (p.size() < m.size() || !x.contains(p)) continue;
    bool projective = false, checked = false;
    for (const auto &q : enumerate_epis(p, m)) {
      if (!x.contains(kernel(q).sub)) continue;
      if (!checked) {
        projective = x_projective_module(p, x, u, probes).holds();
        checked = true;
      }
      if (!projective) break;
      if (precover_factorization(q, x, u)) return {q, "universe search"};
    }
  }
  throw HypothesisNotEstablished("no x-projective precover of " + m.to_string() + " in " + u.describe());
}

inline auto search_preenvelope(const FpModule &m, const XClassSpec &x, const ModuleUniverse &u) -> ModulePreenvelope {
  check_module_cap(m.size(), "preenvelope input");
  auto probes = injective_module_probes(x, u);
  for (const auto &e : enumerate_modules(u)) {
    if (e.size() < m.size() || !x.contains(e)) continue;
    bool injective = false, checked = false;
    for (const auto &j : enumerate_monos(m, e)) {
      if (!x.contains(cokernel(j).module)) continue;
      if (!checked) {
        injective = x_injective_module(e, x, u, probes).holds();
        checked = true;
      }
      if (!injective) break;
      if (preenvelope_factorization(j, x, u)) return {j, "universe search"};
    }
  }
  throw HypothesisNotEstablished("no x-injective preenvelope of " + m.to_string() + " in " + u.describe());
}

/// Free cover for the class of all modules, universe search otherwise.
inline auto default_precover_strategy(const XClassSpec &x, const ModuleUniverse &u) -> PrecoverStrategy {
  if (x.kind() == XClassSpec::Kind::All) return free_cover;
  return [x, u](const FpModule &m) { return search_precover(m, x, u); };
}

inline auto default_preenvelope_strategy(const XClassSpec &x, const ModuleUniverse &u) -> PreenvelopeStrategy {
  if (x.kind() == XClassSpec::Kind::All && u.ring.is_modular()) return hull_preenvelope;
  return [x, u](const FpModule &m) { return search_preenvelope(m, x, u); };
}

/// (p, q) with q: p -> m onto, p x-projective and Ker q in x.
inline auto module_epi_precover(const FpModule &m, const XClassSpec &x, const ModuleUniverse &u) -> ModulePrecover {
  return default_precover_strategy(x, u)(m);
}

inline auto module_epi_precover(const FpModule &m, const XClassSpec &x) -> ModulePrecover {
  return module_epi_precover(m, x, ModuleUniverse{m.ring(), 8});
}

inline auto module_mono_preenvelope(const FpModule &m, const XClassSpec &x, const ModuleUniverse &u)
    -> ModulePreenvelope {
  return default_preenvelope_strategy(x, u)(m);
}

inline auto module_mono_preenvelope(const FpModule &m, const XClassSpec &x) -> ModulePreenvelope {
  return module_mono_preenvelope(m, x, ModuleUniverse{m.ring(), 8});
}

namespace detail {
inline auto record_of(const std::string &step, const ChainProblem &p) -> BuildRecord {
  return {step, p.system.system().variable_count(), p.system.system().equations().size(), false, {}};
}
} // namespace detail

} // namespace homkit
