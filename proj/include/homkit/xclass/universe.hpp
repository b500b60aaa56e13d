#pragma once

#include "homkit/xclass/xclass.hpp"

#include <cstdlib>
#include <iostream>
#include <set>
#include <stdexcept>

namespace homkit {

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Hard limits on enumeration scopes.
struct Caps {
  std::uint64_t module_size = 64;
  int window = 5;
};

namespace detail {
inline auto caps_storage() -> Caps & {
  static Caps c = [] {
    Caps out;
    if (const char *env = std::getenv("HOMKIT_CAP")) {
      try {
        out.module_size = std::stoull(env);
        std::cerr << "warning: HOMKIT_CAP overrides the module size cap to " << out.module_size << "\n";
      } catch (const std::exception &) {
        std::cerr << "warning: ignoring malformed HOMKIT_CAP '" << env << "'\n";
      }
    }
    return out;
  }();
  return c;
}
} // namespace detail

inline auto caps() -> const Caps & { return detail::caps_storage(); }

/// Raises the caps for one process, with a warning.
inline void set_caps(Caps c) {
  std::cerr << "warning: enumeration caps raised to module size " << c.module_size << ", window " << c.window << "\n";
  detail::caps_storage() = c;
}

inline void check_module_cap(std::uint64_t size, const std::string &what) {
  if (size > caps().module_size)
    throw CapExceeded(what + " has " + std::to_string(size) + " elements, above the cap of " +
                      std::to_string(caps().module_size));
}

inline void check_window_cap(int width, const std::string &what) {
  if (width > caps().window)
    throw CapExceeded(what + " spans " + std::to_string(width) + " degrees, above the cap of " +
                      std::to_string(caps().window));
}

/// Every module over Z/n with at most size_bound elements, up to isomorphism.
struct ModuleUniverse {
  RingSpec ring = RingSpec::integers_mod(2);
  std::uint64_t size_bound = 8;

  [[nodiscard]] auto describe() const -> std::string {
    return "modules over " + ring.to_string() + " with at most " + std::to_string(size_bound) + " elements";
  }
};

/// Ordered by cardinality, then number of factors, then factor list.
inline auto enumerate_modules(const ModuleUniverse &u) -> std::vector<FpModule> {
  if (!u.ring.is_modular()) throw std::invalid_argument("module universes need a ring Z/n");
  check_module_cap(u.size_bound, "module universe bound");
  std::int64_t n = to_int64(u.ring.modulus());
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 2; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>> chains;
  std::vector<std::int64_t> cur;
  auto bound = u.size_bound;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t size) {
    chains.emplace_back(size, cur);
    for (auto d : divs) {
      if (size * static_cast<std::uint64_t>(d) > bound) continue;
      if (!cur.empty() && d % cur.back() != 0) continue;
      cur.push_back(d);
      rec(size * static_cast<std::uint64_t>(d));
      cur.pop_back();
    }
  };
  if (bound >= 1) rec(1);
  std::sort(chains.begin(), chains.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  std::vector<FpModule> out;
  for (const auto &[s, c] : chains) {
    std::vector<Integer> f;
    for (auto d : c) f.push_back(from_int64(d));
    out.push_back(FpModule::from_factors(u.ring, f));
  }
  return out;
}

namespace detail {
/// Calls f on every homomorphism a -> b in the order of Hom element indices.
inline void for_each_hom(const FpModule &a, const FpModule &b, const std::function<bool(const ModuleMap &)> &f) {
  HomModule h(a, b);
  FiniteModule fh(h.module());
  for (std::size_t i = 0; i < fh.size(); ++i)
    if (!f(h.decode(fh.element(i)))) return;
}

inline auto image_size(const FiniteModule &fb, const ModuleMap &f) -> std::size_t {
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < f.source().rank(); ++j) gens.push_back(fb.index(f.matrix().col(j)));
  return fb.span(gens).count();
}
} // namespace detail

inline auto enumerate_monos(const FpModule &a, const FpModule &b) -> std::vector<ModuleMap> {
  check_module_cap(a.size(), "mono source");
  check_module_cap(b.size(), "mono target");
  std::vector<ModuleMap> out;
  if (a.size() > b.size()) return out;
  FiniteModule fb(b);
  detail::for_each_hom(a, b, [&](const ModuleMap &f) {
    if (detail::image_size(fb, f) == a.size()) out.push_back(f);
    return true;
  });
  return out;
}

inline auto enumerate_epis(const FpModule &a, const FpModule &b) -> std::vector<ModuleMap> {
  check_module_cap(a.size(), "epi source");
  check_module_cap(b.size(), "epi target");
  std::vector<ModuleMap> out;
  if (a.size() < b.size()) return out;
  FiniteModule fb(b);
  detail::for_each_hom(a, b, [&](const ModuleMap &f) {
    if (detail::image_size(fb, f) == b.size()) out.push_back(f);
    return true;
  });
  return out;
}

/// Automorphism lists keyed by module.
using AutomorphismCache = std::map<std::vector<Integer>, std::vector<ModuleMap>>;

/// Degreewise isomorphisms a with a^{k+1} d = d' a^k, if any.
inline auto are_isomorphic(const Complex &c1, const Complex &c2, AutomorphismCache &cache) -> bool {
  if (c1.is_zero() || c2.is_zero()) return c1.is_zero() && c2.is_zero();
  if (c1.lo() != c2.lo() || c1.hi() != c2.hi()) return false;
  for (int k = c1.lo(); k <= c1.hi(); ++k)
    if (!(c1.component(k) == c2.component(k))) return false;
  std::vector<std::vector<ModuleMap>> autos;
  for (int k = c1.lo(); k <= c1.hi(); ++k) {
    FpModule m = c1.component(k);
    auto it = cache.find(m.factors());
    if (it == cache.end()) it = cache.emplace(m.factors(), enumerate_monos(m, m)).first;
    autos.push_back(it->second);
  }
  std::function<bool(int, const ModuleMap &)> rec = [&](int k, const ModuleMap &prev) -> bool {
    if (k > c1.hi()) return true;
    for (const auto &a : autos[static_cast<std::size_t>(k - c1.lo())]) {
      if (k > c1.lo() && !(a * c1.differential(k - 1) == c2.differential(k - 1) * prev)) continue;
      if (rec(k + 1, a)) return true;
    }
    return false;
  };
  return rec(c1.lo(), ModuleMap());
}

inline auto are_isomorphic(const Complex &c1, const Complex &c2) -> bool {
  AutomorphismCache cache;
  return are_isomorphic(c1, c2, cache);
}

/// Exact complexes starting in degree 0 with at most `window` nonzero degrees
/// and components from the base universe. Shifts are left to the consumer.
struct Eps1Universe {
  ModuleUniverse base;
  int window = 3;
  bool up_to_isomorphism = true;

  [[nodiscard]] auto describe() const -> std::string {
    return "exact complexes of width at most " + std::to_string(window) + " on " + base.describe() +
           (up_to_isomorphism ? ", up to isomorphism" : "") + ", all shifts";
  }
};

/// Every exact complex in the universe whose differential kernels lie in x,
/// beginning with the zero complex.
inline auto enumerate_eps1(const Eps1Universe &u, const XClassSpec &x) -> std::vector<Complex> {
  if (u.window > 4) throw CapExceeded("eps1 window above 4");
  check_window_cap(u.window, "eps1 window");
  const RingSpec &ring = u.base.ring;
  std::vector<FpModule> mods;
  for (auto &m : enumerate_modules(u.base))
    if (!m.is_zero()) mods.push_back(m);
  if (!x.contains(FpModule::zero(ring))) return {};
  std::vector<Complex> out{Complex(ring)};
  std::vector<FpModule> comps;
  std::vector<ModuleMap> diffs;
  // image: elements of comps.back() hit by the previous differential.
  std::function<void(const Bits &)> rec = [&](const Bits &image) {
    const FpModule top = comps.back();
    FiniteModule ft(top);
    if (image.count() == ft.size() && comps.size() >= 2) {
      out.emplace_back(ring, 0, comps, diffs);
      // ker d^top = top itself.
    }
    if (static_cast<int>(comps.size()) >= u.window) return;
    for (const auto &next : mods) {
      FiniteModule fn(next);
      detail::for_each_hom(top, next, [&](const ModuleMap &d) {
        auto table = ft.table(d, fn);
        Bits ker = preimage_set(table, fn.zero_set());
        if (!(ker == image)) return true;
        if (!x.contains(kernel(d).sub)) return true;
        comps.push_back(next);
        diffs.push_back(d);
        rec(image_set(table, ft.full_set(), fn.size()));
        comps.pop_back();
        diffs.pop_back();
        return true;
      });
    }
  };
  for (const auto &m : mods) {
    comps = {m};
    diffs.clear();
    rec(FiniteModule(m).zero_set());
  }
  // The last kernel is the top component.
  std::vector<Complex> kept;
  AutomorphismCache cache;
  std::map<std::vector<std::vector<Integer>>, std::vector<std::size_t>> groups;
  for (auto &c : out) {
    if (!c.is_zero() && !x.contains(c.component(c.hi()))) continue;
    if (u.up_to_isomorphism) {
      std::vector<std::vector<Integer>> sig;
      for (int k = c.lo(); k <= c.hi(); ++k) sig.push_back(c.component(k).factors());
      auto &g = groups[sig];
      bool dup = false;
      for (auto i : g)
        if (are_isomorphic(kept[i], c, cache)) {
          dup = true;
          break;
        }
      if (dup) continue;
      g.push_back(kept.size());
    }
    kept.push_back(std::move(c));
  }
  return kept;
}

/// Probe complexes for complex-level lifting checks: spheres and disks on
/// universe members in the window, every complex of width at most
/// general_width with components of at most general_bound elements, and extras.
struct ComplexUniverse {
  ModuleUniverse base;
  int lo = 0, hi = 0;
  int general_width = 2;
  std::uint64_t general_bound = 4;
  std::vector<Complex> extra;

  [[nodiscard]] auto describe() const -> std::string {
    return "complexes in degrees [" + std::to_string(lo) + ", " + std::to_string(hi) + "] on " + base.describe() +
           ": spheres, disks, width <= " + std::to_string(general_width) + " with components <= " +
           std::to_string(general_bound) + " elements" +
           (extra.empty() ? std::string() : ", " + std::to_string(extra.size()) + " extra");
  }
};

inline auto enumerate_complexes(const ComplexUniverse &u) -> std::vector<Complex> {
  check_window_cap(u.hi - u.lo + 1, "complex universe window");
  const RingSpec &ring = u.base.ring;
  std::vector<Complex> out;
  std::set<std::string> seen;
  auto add = [&](const Complex &c) {
    if (seen.insert(c.to_string()).second) out.push_back(c);
  };
  add(Complex(ring));
  auto mods = enumerate_modules(u.base);
  for (int k = u.lo; k <= u.hi; ++k)
    for (const auto &m : mods)
      if (!m.is_zero()) add(sphere(k, m));
  for (int k = u.lo; k < u.hi; ++k)
    for (const auto &m : mods)
      if (!m.is_zero()) add(disk(k, m));
  std::vector<FpModule> small;
  for (const auto &m : mods)
    if (!m.is_zero() && m.size() <= u.general_bound) small.push_back(m);
  for (int w = 2; w <= u.general_width; ++w)
    for (int s = u.lo; s + w - 1 <= u.hi; ++s) {
      std::vector<FpModule> comps;
      std::vector<ModuleMap> diffs;
      std::function<void()> rec = [&]() {
        if (static_cast<int>(comps.size()) == w) {
          add(Complex(ring, s, comps, diffs));
          return;
        }
        for (const auto &m : small) {
          if (comps.empty()) {
            comps.push_back(m);
            rec();
            comps.pop_back();
            continue;
          }
          detail::for_each_hom(comps.back(), m, [&](const ModuleMap &d) {
            if (!diffs.empty() && !(d * diffs.back()).is_zero()) return true;
            comps.push_back(m);
            diffs.push_back(d);
            rec();
            comps.pop_back();
            diffs.pop_back();
            return true;
          });
        }
      };
      rec();
    }
  for (const auto &c : u.extra) add(c);
  return out;
}

} // namespace homkit
