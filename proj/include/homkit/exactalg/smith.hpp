#pragma once

#include "homkit/exactalg/matrix.hpp"
#include "homkit/exactalg/ring.hpp"

#include <algorithm>
#include <utility>

namespace homkit {

/// u * a * v = d, with u_inv the inverse of u.
template <class T> struct SmithForm {
  Matrix<T> u, u_inv, d, v;
  std::size_t rank = 0;
};

namespace detail {

template <class Arith> class SmithEngine {
  using T = typename Arith::value_type;

public:
  SmithEngine(Arith ar, Matrix<T> a)
      : ar_(ar), d_(std::move(a)), u_(Matrix<T>::identity(d_.rows())),
        ui_(Matrix<T>::identity(d_.rows())), v_(Matrix<T>::identity(d_.cols())) {
    for (std::size_t i = 0; i < d_.rows(); ++i)
      for (std::size_t j = 0; j < d_.cols(); ++j) d_(i, j) = ar_.reduce(d_(i, j));
  }

  auto run() -> SmithForm<T> {
    std::size_t m = d_.rows(), c = d_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, c); ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool changed = clear_column(t);
        changed = clear_row(t) || changed;
        if (changed) continue;
        if (!enforce_divisibility(t)) break;
      }
    }
    SmithForm<T> out{u_, ui_, d_, v_, 0};
    for (std::size_t i = 0; i < std::min(m, c); ++i)
      if (d_(i, i) != 0) ++out.rank;
    return out;
  }

private:
  auto place_pivot(std::size_t t) -> bool {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    T best{};
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        T nv = ar_.norm(d_(i, j));
        if (!found || nv < best) {
          found = true;
          best = nv;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    normalize_pivot(t);
    return true;
  }

  void normalize_pivot(std::size_t t) {
    auto [un, uninv] = ar_.normalizer(d_(t, t));
    if (un == 1) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(t, j) = ar_.mul(un, d_(t, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = ar_.mul(un, u_(t, j));
    for (std::size_t i = 0; i < ui_.rows(); ++i) ui_(i, t) = ar_.mul(ui_(i, t), uninv);
  }

  auto clear_column(std::size_t t) -> bool {
    bool changed = false;
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (d_(i, t) == 0) continue;
      if (ar_.divides(d_(t, t), d_(i, t))) {
        T q = ar_.quotient(d_(t, t), d_(i, t));
        row_axpy(i, t, q);
      } else {
        auto e = ar_.gcdex(d_(t, t), d_(i, t));
        row_mix(t, i, e);
        normalize_pivot(t);
        changed = true;
      }
    }
    return changed;
  }

  auto clear_row(std::size_t t) -> bool {
    bool changed = false;
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (d_(t, j) == 0) continue;
      if (ar_.divides(d_(t, t), d_(t, j))) {
        T q = ar_.quotient(d_(t, t), d_(t, j));
        col_axpy(j, t, q);
      } else {
        auto e = ar_.gcdex(d_(t, t), d_(t, j));
        col_mix(t, j, e);
        normalize_pivot(t);
        changed = true;
      }
    }
    return changed;
  }

  // Pivot must divide the trailing block; otherwise fold an offending row in.
  auto enforce_divisibility(std::size_t t) -> bool {
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(i, j) != 0 && !ar_.divides(d_(t, t), d_(i, j))) {
          row_axpy(t, i, ar_.sub(T(0), T(1)));
          return true;
        }
    return false;
  }

  // row_i -= q * row_t
  void row_axpy(std::size_t i, std::size_t t, const T &q) {
    for (std::size_t j = 0; j < d_.cols(); ++j)
      d_(i, j) = ar_.sub(d_(i, j), ar_.mul(q, d_(t, j)));
    for (std::size_t j = 0; j < u_.cols(); ++j)
      u_(i, j) = ar_.sub(u_(i, j), ar_.mul(q, u_(t, j)));
    for (std::size_t r = 0; r < ui_.rows(); ++r)
      ui_(r, t) = ar_.add(ui_(r, t), ar_.mul(ui_(r, i), q));
  }

  // col_j -= q * col_t
  void col_axpy(std::size_t j, std::size_t t, const T &q) {
    for (std::size_t i = 0; i < d_.rows(); ++i)
      d_(i, j) = ar_.sub(d_(i, j), ar_.mul(q, d_(i, t)));
    for (std::size_t i = 0; i < v_.rows(); ++i)
      v_(i, j) = ar_.sub(v_(i, j), ar_.mul(q, v_(i, t)));
  }

  void row_mix(std::size_t a, std::size_t b, const Gcdex<T> &e) {
    auto mix = [&](Matrix<T> &m) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        T x = m(a, j), y = m(b, j);
        m(a, j) = ar_.add(ar_.mul(e.s, x), ar_.mul(e.t, y));
        m(b, j) = ar_.add(ar_.mul(e.u, x), ar_.mul(e.v, y));
      }
    };
    mix(d_);
    mix(u_);
    // inverse of [s t; u v] is [v -t; -u s]
    for (std::size_t r = 0; r < ui_.rows(); ++r) {
      T x = ui_(r, a), y = ui_(r, b);
      ui_(r, a) = ar_.sub(ar_.mul(x, e.v), ar_.mul(y, e.u));
      ui_(r, b) = ar_.sub(ar_.mul(y, e.s), ar_.mul(x, e.t));
    }
  }

  void col_mix(std::size_t a, std::size_t b, const Gcdex<T> &e) {
    auto mix = [&](Matrix<T> &m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        T x = m(i, a), y = m(i, b);
        m(i, a) = ar_.add(ar_.mul(x, e.s), ar_.mul(y, e.t));
        m(i, b) = ar_.add(ar_.mul(x, e.u), ar_.mul(y, e.v));
      }
    };
    mix(d_);
    mix(v_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
    for (std::size_t i = 0; i < ui_.rows(); ++i) std::swap(ui_(i, a), ui_(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  Arith ar_;
  Matrix<T> d_, u_, ui_, v_;
};

} // namespace detail

template <class Arith>
auto smith_form(const Arith &ar, const Matrix<typename Arith::value_type> &a)
    -> SmithForm<typename Arith::value_type> {
  return detail::SmithEngine<Arith>(ar, a).run();
}

/// Smith normal form over Z: u*a*v = d, u and v unimodular, d diagonal with
/// d_1 | d_2 | ... and nonnegative entries.
inline auto smith_normal_form(const IntMatrix &a) -> SmithForm<Integer> {
  return smith_form(IntegerArith{}, a);
}

/// Smith form over Z/n: diagonal entries are divisors of n (0 for free).
inline auto smith_normal_form_mod(const IntMatrix &a, std::int64_t n) -> SmithForm<Integer> {
  auto s = smith_form(ModArith{n}, to_small(a, n));
  return {to_big(s.u), to_big(s.u_inv), to_big(s.d), to_big(s.v), s.rank};
}

} // namespace homkit
