#pragma once

#include "homkit/exactalg/matrix.hpp"
#include "homkit/exactalg/ring.hpp"

#include <vector>

namespace homkit {

namespace detail {

using Row64 = std::vector<std::int64_t>;

inline auto is_zero_row(const Row64 &r) -> bool {
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

/// Howell form of the rows over Z/n. Pivots are divisors of n, entries above a
/// pivot lie in [0, pivot), zero rows are dropped.
inline auto howell_rows(std::vector<Row64> rows, std::size_t cols, std::int64_t n)
    -> std::vector<Row64> {
  ModArith ar{n};
  for (auto &r : rows)
    for (auto &x : r) x = ar.reduce(x);
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (i == r) continue;
      if (rows[r][c] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      auto e = ar.gcdex(rows[r][c], rows[i][c]);
      for (std::size_t j = c; j < cols; ++j) {
        std::int64_t x = rows[r][j], y = rows[i][j];
        rows[r][j] = ar.add(ar.mul(e.s, x), ar.mul(e.t, y));
        rows[i][j] = ar.add(ar.mul(e.u, x), ar.mul(e.v, y));
      }
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    auto [un, uninv] = ar.normalizer(rows[r][c]);
    if (un != 1)
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = ar.mul(un, rows[r][j]);
    std::int64_t p = rows[r][c];
    Row64 ann(cols, 0);
    for (std::size_t j = c + 1; j < cols; ++j) ann[j] = ar.mul(n / p, rows[r][j]);
    if (!is_zero_row(ann)) rows.push_back(std::move(ann));
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t c = pivot_cols[k];
    std::int64_t p = rows[k][c];
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t q = rows[i][c] / p;
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = ar.sub(rows[i][j], ar.mul(q, rows[k][j]));
    }
  }
  return rows;
}

inline auto pivot_column(const Row64 &r) -> std::size_t {
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) return j;
  return r.size();
}

} // namespace detail

/// Howell form over Z/n.
inline auto howell_form(const IntMatrix &a, const RingSpec &ring) -> IntMatrix {
  if (!ring.is_modular()) throw std::invalid_argument("Howell form needs a ring Z/n; use the Smith path over Z");
  std::int64_t n = ring.modulus();
  SmallMatrix s = to_small(a, n);
  std::vector<detail::Row64> rows;
  for (std::size_t i = 0; i < s.rows(); ++i) rows.push_back(s.row(i));
  auto h = detail::howell_rows(std::move(rows), a.cols(), n);
  return to_big(SmallMatrix::from_rows(a.cols(), h));
}

} // namespace homkit
