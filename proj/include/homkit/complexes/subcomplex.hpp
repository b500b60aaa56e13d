#pragma once

#include "homkit/complexes/complex.hpp"

#include <functional>

namespace homkit {

struct SubcomplexData {
  Complex sub;
  ChainMap inclusion;
  Complex quotient;
  ChainMap projection;
};

/// Element tables for a finite complex, used to enumerate its subcomplexes.
class FiniteComplex {
public:
  /// One submodule per degree lo()..hi().
  using Selection = std::vector<Bits>;

  explicit FiniteComplex(Complex c) : c_(std::move(c)) {
    for (int k = c_.lo(); k <= c_.hi(); ++k) mods_.emplace_back(c_.component(k));
    for (int k = c_.lo(); k < c_.hi(); ++k)
      tables_.push_back(mod(k).table(c_.differential(k), mod(k + 1)));
  }

  [[nodiscard]] auto complex() const -> const Complex & { return c_; }
  [[nodiscard]] auto mod(int k) const -> const FiniteModule & { return mods_[static_cast<std::size_t>(k - c_.lo())]; }

  [[nodiscard]] auto is_closed(const Selection &s) const -> bool {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (!image_set(tables_[i], s[i], mods_[i + 1].size()).subset_of(s[i + 1])) return false;
    return true;
  }

  /// Smallest subcomplex containing the given sets.
  [[nodiscard]] auto closure(Selection s) const -> Selection {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) {
        Bits img = image_set(tables_[i - 1], s[i - 1], mods_[i].size());
        for (auto m : img.members()) s[i].set(m);
      }
      s[i] = mods_[i].span(s[i].members());
    }
    return s;
  }

  [[nodiscard]] auto zero_selection() const -> Selection {
    Selection s;
    for (const auto &m : mods_) s.push_back(m.zero_set());
    return s;
  }
  [[nodiscard]] auto full_selection() const -> Selection {
    Selection s;
    for (const auto &m : mods_) s.push_back(m.full_set());
    return s;
  }

  /// Visits subcomplexes in lexicographic order of the per-degree submodule
  /// lists; stops when f returns false. Returns the number visited.
  auto for_each_subcomplex(const std::function<bool(const Selection &)> &f) const -> std::size_t {
    if (c_.is_zero()) {
      f({});
      return 1;
    }
    std::vector<std::vector<Bits>> subs;
    for (const auto &m : mods_) subs.push_back(m.submodules());
    Selection cur(mods_.size());
    std::size_t count = 0;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (stop) return;
      if (i == mods_.size()) {
        ++count;
        if (!f(cur)) stop = true;
        return;
      }
      std::optional<Bits> need;
      if (i > 0) need = image_set(tables_[i - 1], cur[i - 1], mods_[i].size());
      for (const auto &b : subs[i]) {
        if (need && !need->subset_of(b)) continue;
        cur[i] = b;
        rec(i + 1);
        if (stop) return;
      }
    };
    rec(0);
    return count;
  }

  [[nodiscard]] auto realize(const Selection &s) const -> SubcomplexData {
    const RingSpec &ring = c_.ring();
    std::map<int, Submodule> subs;
    std::map<int, Cokernel> quots;
    std::map<int, FpModule> sc, qc;
    for (std::size_t i = 0; i < s.size(); ++i) {
      int k = c_.lo() + static_cast<int>(i);
      subs.emplace(k, submodule_generated(c_.component(k), mods_[i].generators(s[i])));
      quots.emplace(k, cokernel(subs.at(k).inclusion));
      sc.emplace(k, subs.at(k).module);
      qc.emplace(k, quots.at(k).module);
    }
    std::map<int, IntMatrix> sd, qd;
    for (int k = c_.lo(); k < c_.hi(); ++k) {
      ModuleMap dk = c_.differential(k) * subs.at(k).inclusion;
      const ModuleMap &inc = subs.at(k + 1).inclusion;
      std::vector<Element> cols;
      for (std::size_t j = 0; j < dk.source().rank(); ++j) {
        auto y = preimage(inc, dk.matrix().col(j));
        if (!y) throw std::invalid_argument("selection is not closed under the differential");
        cols.push_back(*y);
      }
      sd.emplace(k, IntMatrix::from_columns(inc.source().rank(), cols));
      const auto &q = quots.at(k);
      ModuleMap sec = ModuleMap::trusted(q.module, c_.component(k), q.section);
      qd.emplace(k, (quots.at(k + 1).projection * c_.differential(k) * sec).matrix());
    }
    SubcomplexData out;
    out.sub = Complex::from_maps(ring, sc, sd);
    out.quotient = Complex::from_maps(ring, qc, qd);
    std::map<int, ModuleMap> inc, proj;
    for (int k = c_.lo(); k <= c_.hi(); ++k) {
      inc.emplace(k, ModuleMap::trusted(out.sub.component(k), c_.component(k), subs.at(k).inclusion.matrix()));
      proj.emplace(k, ModuleMap::trusted(c_.component(k), out.quotient.component(k), quots.at(k).projection.matrix()));
    }
    out.inclusion = ChainMap(out.sub, c_, inc);
    out.projection = ChainMap(c_, out.quotient, proj);
    return out;
  }

  /// The selection given by the image of a chain map into this complex.
  [[nodiscard]] auto image_of(const ChainMap &f) const -> Selection {
    Selection s = zero_selection();
    for (std::size_t i = 0; i < mods_.size(); ++i) {
      int k = c_.lo() + static_cast<int>(i);
      ModuleMap fk = f.component(k);
      std::vector<std::size_t> gens;
      for (std::size_t j = 0; j < fk.source().rank(); ++j) gens.push_back(mods_[i].index(fk.matrix().col(j)));
      s[i] = mods_[i].span(gens);
    }
    return s;
  }

private:
  Complex c_;
  std::vector<FiniteModule> mods_;
  std::vector<std::vector<std::size_t>> tables_;
};

/// The quotient of a complex by the image of a chain map (mono or not).
inline auto quotient_by_image(const ChainMap &f) -> SubcomplexData {
  FiniteComplex fc(f.target());
  return fc.realize(fc.image_of(f));
}

/// The kernel of a chain map as a subcomplex of its source.
inline auto kernel_subcomplex(const ChainMap &f) -> SubcomplexData {
  FiniteComplex fc(f.source());
  auto s = fc.zero_selection();
  const Complex &c = f.source();
  for (std::size_t i = 0; i < s.size(); ++i) {
    int k = c.lo() + static_cast<int>(i);
    FiniteModule ft(f.target().component(k));
    s[i] = preimage_set(fc.mod(k).table(f.component(k), ft), ft.zero_set());
  }
  return fc.realize(s);
}

} // namespace homkit
