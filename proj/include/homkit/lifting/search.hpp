#pragma once

#include "homkit/xclass.hpp"

namespace homkit::detail {

/// Exhaustive-search budget in visited families.
inline constexpr std::uint64_t search_budget = std::uint64_t(1) << 22;

enum class SearchResult { Found, NotFound, BudgetExceeded };

/// Searches every homomorphism g: b -> e for g o i = f.
inline auto search_module_extension(const ModuleMap &i, const ModuleMap &f) -> SearchResult {
  auto hs = HomModule(i.target(), f.target()).module().cardinality();
  if (!hs || *hs > Integer(static_cast<unsigned long>(search_budget))) return SearchResult::BudgetExceeded;
  bool found = false;
  for_each_hom(i.target(), f.target(), [&](const ModuleMap &g) {
    found = g * i == f;
    return !found;
  });
  return found ? SearchResult::Found : SearchResult::NotFound;
}

/// Searches every g: p -> a with q o g = h.
inline auto search_module_lift(const ModuleMap &q, const ModuleMap &h) -> SearchResult {
  auto hs = HomModule(h.source(), q.source()).module().cardinality();
  if (!hs || *hs > Integer(static_cast<unsigned long>(search_budget))) return SearchResult::BudgetExceeded;
  bool found = false;
  for_each_hom(h.source(), q.source(), [&](const ModuleMap &g) {
    found = q * g == h;
    return !found;
  });
  return found ? SearchResult::Found : SearchResult::NotFound;
}

/// Depth-first search over families of maps s^k -> t^{k+deg}, k = lo..hi.
/// accept(k, family) prunes after degree k has been chosen; done(family)
/// decides a complete family.
inline auto search_families(const Complex &s, const Complex &t, int deg, int lo, int hi,
                            const std::function<bool(int, const std::map<int, ModuleMap> &)> &accept,
                            const std::function<bool(const std::map<int, ModuleMap> &)> &done) -> SearchResult {
  std::map<int, ModuleMap> fam;
  std::uint64_t visited = 0;
  bool found = false, over = false;
  std::function<void(int)> rec = [&](int k) {
    if (found || over) return;
    if (k > hi) {
      if (++visited > search_budget) {
        over = true;
        return;
      }
      found = done(fam);
      return;
    }
    for_each_hom(s.component(k), t.component(k + deg), [&](const ModuleMap &g) {
      if (++visited > search_budget) over = true;
      if (over) return false;
      fam[k] = g;
      if (accept(k, fam)) rec(k + 1);
      return !found && !over;
    });
    fam.erase(k);
  };
  rec(lo);
  if (found) return SearchResult::Found;
  return over ? SearchResult::BudgetExceeded : SearchResult::NotFound;
}

inline auto chain_square_ok(const Complex &s, const Complex &t, int k, const std::map<int, ModuleMap> &fam) -> bool {
  auto prev = fam.find(k - 1);
  if (prev == fam.end()) return true;
  return t.differential(k - 1) * prev->second == fam.at(k) * s.differential(k - 1);
}

/// Searches every chain map g: phi.target -> c with g o phi = f.
inline auto search_chain_extension(const ChainMap &phi, const ChainMap &f) -> SearchResult {
  const Complex &b = phi.target(), &c = f.target();
  auto [lo, hi] = joint_range(b, c);
  return search_families(
      b, c, 0, lo, hi, [&](int k, const auto &fam) { return chain_square_ok(b, c, k, fam); },
      [&](const auto &fam) {
        ChainMap g(b, c, fam);
        return g.is_chain_map() && g * phi == f;
      });
}

/// Searches every chain map g: c -> q.source with q o g = h.
inline auto search_chain_lift(const ChainMap &q, const ChainMap &h) -> SearchResult {
  const Complex &c = h.source(), &a = q.source();
  auto [lo, hi] = joint_range(c, a);
  return search_families(
      c, a, 0, lo, hi, [&](int k, const auto &fam) { return chain_square_ok(c, a, k, fam); },
      [&](const auto &fam) {
        ChainMap g(c, a, fam);
        return g.is_chain_map() && q * g == h;
      });
}

/// Searches every family s^k: source^k -> target^{k-1} for a null-homotopy of f.
inline auto search_homotopy(const ChainMap &f) -> SearchResult {
  const Complex &x = f.source(), &y = f.target();
  auto [lo, hi] = joint_range(x, y);
  return search_families(
      x, y, -1, lo, hi + 1,
      [&](int k, const auto &fam) {
        // The identity at degree k-1 involves s^k and s^{k-1} only.
        if (k - 1 < lo) return true;
        Homotopy h{f, fam};
        auto lhs = h.component(k) * x.differential(k - 1) + y.differential(k - 2) * h.component(k - 1);
        return lhs == f.component(k - 1);
      },
      [&](const auto &fam) { return Homotopy{f, fam}.verify(); });
}

} // namespace homkit::detail
