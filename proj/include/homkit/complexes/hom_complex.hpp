#pragma once

#include "homkit/complexes/complex.hpp"

namespace homkit {

/// The internal Hom complex with codecs between elements and families of maps.
class HomComplex {
public:
  HomComplex(Complex x, Complex y) : x_(std::move(x)), y_(std::move(y)) {
    const RingSpec &ring = y_.ring();
    if (x_.is_zero() || y_.is_zero()) {
      complex_ = Complex(ring);
      return;
    }
    lo_ = y_.lo() - x_.hi();
    hi_ = y_.hi() - x_.lo();
    for (int n = lo_; n <= hi_; ++n) {
      Level lv;
      std::vector<FpModule> ms;
      for (int i = x_.lo(); i <= x_.hi(); ++i) {
        lv.degrees.push_back(i);
        lv.homs.emplace_back(x_.component(i), y_.component(i + n));
        ms.push_back(lv.homs.back().module());
      }
      lv.sum = direct_sum(ring, ms);
      levels_.emplace(n, std::move(lv));
    }
    std::map<int, FpModule> comps;
    for (const auto &[n, lv] : levels_) comps.emplace(n, lv.sum.module);
    std::map<int, IntMatrix> diffs;
    for (int n = lo_; n < hi_; ++n) {
      const FpModule &src = levels_.at(n).sum.module, &tgt = levels_.at(n + 1).sum.module;
      std::vector<Element> cols;
      for (std::size_t c = 0; c < src.rank(); ++c) {
        Element e(src.rank(), 0);
        e[c] = 1;
        cols.push_back(encode(n + 1, boundary(n, decode(n, e))));
      }
      diffs.emplace(n, IntMatrix::from_columns(tgt.rank(), cols));
    }
    complex_ = Complex::from_maps(ring, comps, diffs);
  }

  [[nodiscard]] auto complex() const -> const Complex & { return complex_; }
  [[nodiscard]] auto source() const -> const Complex & { return x_; }
  [[nodiscard]] auto target() const -> const Complex & { return y_; }

  /// Maps x^i -> y^{i+n} for the given element of degree n.
  [[nodiscard]] auto decode(int n, const Element &e) const -> std::map<int, ModuleMap> {
    std::map<int, ModuleMap> out;
    auto it = levels_.find(n);
    if (it == levels_.end()) return out;
    const Level &lv = it->second;
    for (std::size_t j = 0; j < lv.degrees.size(); ++j)
      out.emplace(lv.degrees[j], lv.homs[j].decode(lv.sum.projections[j].apply(e)));
    return out;
  }

  [[nodiscard]] auto encode(int n, const std::map<int, ModuleMap> &family) const -> Element {
    auto it = levels_.find(n);
    if (it == levels_.end()) return {};
    const Level &lv = it->second;
    Element e = lv.sum.module.zero_element();
    for (std::size_t j = 0; j < lv.degrees.size(); ++j) {
      auto f = family.find(lv.degrees[j]);
      if (f == family.end()) continue;
      Element part = lv.sum.injections[j].apply(lv.homs[j].encode(f->second));
      for (std::size_t c = 0; c < e.size(); ++c) e[c] += part[c];
    }
    return lv.sum.module.reduce(std::move(e));
  }

  /// (∂f)^i = d_y f^i - (-1)^n f^{i+1} d_x^i.
  [[nodiscard]] auto boundary(int n, const std::map<int, ModuleMap> &f) const -> std::map<int, ModuleMap> {
    auto at = [&](int i) {
      auto it = f.find(i);
      return it != f.end() ? it->second : ModuleMap::zero(x_.component(i), y_.component(i + n));
    };
    std::map<int, ModuleMap> out;
    for (int i = x_.lo(); i <= x_.hi(); ++i) {
      ModuleMap a = y_.differential(i + n) * at(i);
      ModuleMap b = at(i + 1) * x_.differential(i);
      out.emplace(i, n % 2 == 0 ? a - b : a + b);
    }
    return out;
  }

  [[nodiscard]] auto chain_map_of(const Element &cycle) const -> ChainMap { return {x_, y_, decode(0, cycle)}; }
  [[nodiscard]] auto element_of(const ChainMap &f) const -> Element { return encode(0, f.components()); }

private:
  struct Level {
    std::vector<int> degrees;
    std::vector<HomModule> homs;
    DirectSum sum;
  };
  Complex x_, y_, complex_;
  int lo_ = 0, hi_ = -1;
  std::map<int, Level> levels_;
};

inline auto hom_complex(const Complex &x, const Complex &y) -> Complex { return HomComplex(x, y).complex(); }

} // namespace homkit
