#pragma once

#include "homkit/modules/fp_module.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

namespace homkit {

/// A set of element indices of a finite module.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  [[nodiscard]] auto universe() const -> std::size_t { return n_; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t(1) << (i % 64); }
  [[nodiscard]] auto test(std::size_t i) const -> bool { return (w_[i / 64] >> (i % 64)) & 1U; }
  [[nodiscard]] auto count() const -> std::size_t {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] auto subset_of(const Bits &o) const -> bool {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  [[nodiscard]] auto intersect(const Bits &o) const -> Bits {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  [[nodiscard]] auto members() const -> std::vector<std::size_t> {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) m.push_back(i);
    return m;
  }
  [[nodiscard]] auto words() const -> const std::vector<std::uint64_t> & { return w_; }

  friend auto operator==(const Bits &a, const Bits &b) -> bool { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend auto operator<(const Bits &a, const Bits &b) -> bool {
    // Ordered by member list, smallest index first.
    for (std::size_t i = 0; i < a.n_ && i < b.n_; ++i)
      if (a.test(i) != b.test(i)) return a.test(i);
    return a.n_ < b.n_;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  auto operator()(const Bits &b) const -> std::size_t {
    std::size_t h = b.universe();
    for (auto w : b.words()) h = h * 0x9E3779B97F4A7C15ULL + w;
    return h;
  }
};

/// Element table of a small finite module. Elements are indexed in
/// lexicographic order of their canonical coordinates.
class FiniteModule {
public:
  static constexpr std::uint64_t max_elements = std::uint64_t(1) << 20;

  FiniteModule() = default;
  explicit FiniteModule(FpModule m) : m_(std::move(m)) {
    auto c = m_.cardinality();
    if (!c || *c > Integer(static_cast<unsigned long>(max_elements)))
      throw std::domain_error("module " + m_.to_string() + " is too large to tabulate");
    size_ = c->get_ui();
    for (const auto &d : m_.factors()) radix_.push_back(d.get_si());
  }

  [[nodiscard]] auto module() const -> const FpModule & { return m_; }
  [[nodiscard]] auto size() const -> std::size_t { return size_; }

  [[nodiscard]] auto digits(std::size_t idx) const -> std::vector<std::int64_t> {
    std::vector<std::int64_t> x(radix_.size(), 0);
    for (std::size_t i = radix_.size(); i-- > 0;) {
      x[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(radix_[i]));
      idx /= static_cast<std::size_t>(radix_[i]);
    }
    return x;
  }
  [[nodiscard]] auto index_of_digits(const std::vector<std::int64_t> &x) const -> std::size_t {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i)
      idx = idx * static_cast<std::size_t>(radix_[i]) + static_cast<std::size_t>(floor_mod(x[i], radix_[i]));
    return idx;
  }
  [[nodiscard]] auto element(std::size_t idx) const -> Element {
    Element e;
    for (auto d : digits(idx)) e.push_back(from_int64(d));
    return e;
  }
  [[nodiscard]] auto index(const Element &e) const -> std::size_t {
    std::vector<std::int64_t> x;
    for (std::size_t i = 0; i < e.size(); ++i) x.push_back(floor_mod(e[i], m_.factor(i)).get_si());
    return index_of_digits(x);
  }
  [[nodiscard]] auto add(std::size_t a, std::size_t b) const -> std::size_t {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return index_of_digits(x);
  }
  [[nodiscard]] auto neg(std::size_t a) const -> std::size_t {
    auto x = digits(a);
    for (auto &v : x) v = -v;
    return index_of_digits(x);
  }

  [[nodiscard]] auto zero_set() const -> Bits {
    Bits b(size_);
    b.set(0);
    return b;
  }
  [[nodiscard]] auto full_set() const -> Bits {
    Bits b(size_);
    for (std::size_t i = 0; i < size_; ++i) b.set(i);
    return b;
  }

  /// Smallest submodule containing s and x.
  [[nodiscard]] auto join(const Bits &s, std::size_t x) const -> Bits {
    if (s.test(x)) return s;
    std::vector<std::size_t> multiples{0};
    for (std::size_t k = x; k != 0; k = add(k, x)) multiples.push_back(k);
    Bits r(size_);
    for (auto m : s.members())
      for (auto k : multiples) r.set(add(m, k));
    return r;
  }

  [[nodiscard]] auto span(const std::vector<std::size_t> &gens) const -> Bits {
    Bits s = zero_set();
    for (auto g : gens) s = join(s, g);
    return s;
  }

  /// A generating list of the submodule, chosen greedily in index order.
  [[nodiscard]] auto generators(const Bits &s) const -> std::vector<Element> {
    std::vector<Element> gens;
    Bits cur = zero_set();
    for (auto m : s.members()) {
      if (cur.test(m)) continue;
      cur = join(cur, m);
      gens.push_back(element(m));
    }
    return gens;
  }

  /// Every submodule, ordered by size and then by member list.
  [[nodiscard]] auto submodules() const -> std::vector<Bits> {
    std::vector<Bits> all{zero_set()};
    std::unordered_set<Bits, BitsHash> seen{all.front()};
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t x = 1; x < size_; ++x) {
        if (all[i].test(x)) continue;
        Bits t = join(all[i], x);
        if (seen.insert(t).second) all.push_back(t);
      }
    std::sort(all.begin(), all.end(), [](const Bits &a, const Bits &b) {
      return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    return all;
  }

  /// Index of f(element i) for every i; f must have this module as source.
  [[nodiscard]] auto table(const ModuleMap &f, const FiniteModule &target) const -> std::vector<std::size_t> {
    std::vector<std::size_t> t(size_);
    std::vector<std::vector<std::int64_t>> cols;
    for (std::size_t j = 0; j < m_.rank(); ++j) {
      std::vector<std::int64_t> c;
      for (std::size_t i = 0; i < target.module().rank(); ++i) c.push_back(f.matrix()(i, j).get_si());
      cols.push_back(std::move(c));
    }
    for (std::size_t idx = 0; idx < size_; ++idx) {
      auto x = digits(idx);
      std::vector<std::int64_t> y(target.module().rank(), 0);
      for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[j] * cols[j][i];
      t[idx] = target.index_of_digits(y);
    }
    return t;
  }

private:
  FpModule m_;
  std::size_t size_ = 1;
  std::vector<std::int64_t> radix_;
};

inline auto image_set(const std::vector<std::size_t> &table, const Bits &s, std::size_t target_size) -> Bits {
  Bits r(target_size);
  for (auto m : s.members()) r.set(table[m]);
  return r;
}

inline auto preimage_set(const std::vector<std::size_t> &table, const Bits &s) -> Bits {
  Bits r(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (s.test(table[i])) r.set(i);
  return r;
}

/// Calls f on every element of a finite module in index order; stops early
/// when f returns false.
inline void for_each_element(const FpModule &m, const std::function<bool(const Element &)> &f) {
  FiniteModule fm(m);
  for (std::size_t i = 0; i < fm.size(); ++i)
    if (!f(fm.element(i))) return;
}

} // namespace homkit
