#pragma once

#include "homkit/exactalg/howell.hpp"
#include "homkit/exactalg/matrix.hpp"
#include "homkit/exactalg/ring.hpp"
#include "homkit/exactalg/smith.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homkit {

using Vector = std::vector<Integer>;

namespace detail {

struct ModSolve {
  bool solvable = false;
  Row64 particular;
  std::vector<Row64> kernel;
};

// Solves a*x = b over Z/n from the Howell form of [ -b | a ]^T augmented by
// the identity; the t-row gives the lexicographically least solution.
inline auto mod_solve(const SmallMatrix &a, const Row64 &b, std::int64_t n) -> ModSolve {
  std::size_t r = a.rows(), c = a.cols();
  std::size_t w = r + c + 1;
  std::vector<Row64> rows(c + 1, Row64(w, 0));
  for (std::size_t i = 0; i < r; ++i) rows[0][i] = floor_mod(-b[i], n);
  rows[0][r] = 1;
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t i = 0; i < r; ++i) rows[k + 1][i] = a(i, k);
    rows[k + 1][r + 1 + k] = 1;
  }
  auto h = howell_rows(std::move(rows), w, n);
  ModSolve out;
  for (const auto &row : h) {
    std::size_t p = pivot_column(row);
    if (p < r) continue;
    Row64 x(row.begin() + static_cast<std::ptrdiff_t>(r + 1), row.end());
    if (p == r) {
      if (row[r] == 1) {
        out.solvable = true;
        out.particular = std::move(x);
      }
    } else {
      out.kernel.push_back(std::move(x));
    }
  }
  return out;
}

struct IntSolve {
  bool solvable = false;
  Vector particular;
  std::vector<Vector> kernel;
};

inline auto int_solve(const IntMatrix &a, const Vector &b) -> IntSolve {
  auto s = smith_normal_form(a);
  std::size_t r = a.rows(), c = a.cols();
  Vector ub(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) ub[i] += s.u(i, k) * b[k];
  IntSolve out;
  Vector y(c, 0);
  bool ok = true;
  for (std::size_t i = 0; i < r; ++i) {
    if (i < s.rank) {
      if (!divides(s.d(i, i), ub[i])) ok = false;
      else y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      ok = false;
    }
  }
  if (ok) {
    out.solvable = true;
    out.particular.assign(c, 0);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < c; ++k) out.particular[j] += s.v(j, k) * y[k];
  }
  for (std::size_t k = s.rank; k < c; ++k) out.kernel.push_back(s.v.col(k));
  return out;
}

} // namespace detail

struct LinearSolution {
  IntMatrix particular;
  std::vector<Vector> kernel;
};

/// Solves a*X = b over the ring. Over Z/n the particular solution is the
/// lexicographically least one; over Z free parameters are set to zero.
inline auto solve_linear(const IntMatrix &a, const IntMatrix &b, const RingSpec &ring)
    -> std::optional<LinearSolution> {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
  LinearSolution out;
  out.particular = IntMatrix(a.cols(), b.cols());
  bool solvable = true;
  if (ring.is_modular()) {
    std::int64_t n = ring.modulus();
    SmallMatrix sa = to_small(a, n), sb = to_small(b, n);
    for (std::size_t j = 0; j < std::max<std::size_t>(b.cols(), 1); ++j) {
      auto s = detail::mod_solve(sa, b.cols() == 0 ? detail::Row64(a.rows(), 0) : sb.col(j), n);
      if (j == 0)
        for (auto &k : s.kernel) {
          Vector v;
          for (auto x : k) v.push_back(from_int64(x));
          out.kernel.push_back(std::move(v));
        }
      if (b.cols() == 0) break;
      if (!s.solvable) {
        solvable = false;
        break;
      }
      for (std::size_t i = 0; i < a.cols(); ++i) out.particular(i, j) = from_int64(s.particular[i]);
    }
  } else {
    for (std::size_t j = 0; j < std::max<std::size_t>(b.cols(), 1); ++j) {
      Vector bj = b.cols() == 0 ? Vector(a.rows(), 0) : b.col(j);
      auto s = detail::int_solve(a, bj);
      if (j == 0) out.kernel = s.kernel;
      if (b.cols() == 0) break;
      if (!s.solvable) {
        solvable = false;
        break;
      }
      for (std::size_t i = 0; i < a.cols(); ++i) out.particular(i, j) = s.particular[i];
    }
  }
  if (!solvable) return std::nullopt;
  return out;
}

/// Sparse linear system whose variables and equations each carry a modulus
/// (a divisor of n over Z/n; 0 means exact over Z). Equations mod m are
/// scaled by n/m over Z/n and receive a slack column over Z.
class LinearSystem {
public:
  struct Equation {
    std::vector<std::pair<std::size_t, Integer>> terms;
    Integer rhs;
    Integer modulus;
  };
  struct Solution {
    Vector particular;
    std::vector<Vector> kernel;
  };

  explicit LinearSystem(RingSpec ring) : ring_(ring) {}

  auto add_variable(const Integer &modulus) -> std::size_t {
    moduli_.push_back(normalize_modulus(modulus));
    return moduli_.size() - 1;
  }

  void add_equation(std::vector<std::pair<std::size_t, Integer>> terms, const Integer &rhs,
                    const Integer &modulus) {
    Integer m = normalize_modulus(modulus);
    if (m == 1) return;
    std::vector<std::pair<std::size_t, Integer>> kept;
    for (auto &[v, coef] : terms) {
      if (v >= moduli_.size()) throw std::out_of_range("unknown variable in equation");
      Integer c = m == 0 ? coef : floor_mod(coef, m);
      if (c != 0) kept.emplace_back(v, c);
    }
    equations_.push_back({std::move(kept), m == 0 ? rhs : floor_mod(rhs, m), m});
  }

  [[nodiscard]] auto ring() const -> const RingSpec & { return ring_; }
  [[nodiscard]] auto variable_count() const -> std::size_t { return moduli_.size(); }
  [[nodiscard]] auto variable_modulus(std::size_t v) const -> const Integer & { return moduli_[v]; }
  [[nodiscard]] auto equations() const -> const std::vector<Equation> & { return equations_; }

  [[nodiscard]] auto solve() const -> std::optional<Solution> { return run(true); }
  [[nodiscard]] auto kernel() const -> std::vector<Vector> { return run(false)->kernel; }

  /// Does x satisfy every equation?
  [[nodiscard]] auto satisfied_by(const Vector &x) const -> bool {
    for (const auto &e : equations_) {
      Integer s = 0;
      for (const auto &[v, c] : e.terms) s += c * x[v];
      s -= e.rhs;
      if (e.modulus == 0 ? s != 0 : !divides(e.modulus, s)) return false;
    }
    return true;
  }

private:
  [[nodiscard]] auto normalize_modulus(const Integer &m) const -> Integer {
    if (ring_.is_modular()) {
      Integer n = from_int64(ring_.modulus());
      Integer mm = m == 0 ? n : m;
      if (!divides(mm, n)) throw std::invalid_argument("modulus must divide the ring modulus");
      return mm;
    }
    if (m < 0) throw std::invalid_argument("negative modulus");
    return m;
  }

  [[nodiscard]] auto reduce_vector(Vector x) const -> Vector {
    for (std::size_t v = 0; v < x.size(); ++v)
      if (moduli_[v] != 0) x[v] = floor_mod(x[v], moduli_[v]);
    return x;
  }

  static auto is_zero(const Vector &x) -> bool {
    for (const auto &e : x)
      if (e != 0) return false;
    return true;
  }

  [[nodiscard]] auto run(bool inhomogeneous) const -> std::optional<Solution> {
    std::size_t nv = moduli_.size(), ne = equations_.size();
    Solution out;
    if (ring_.is_modular()) {
      std::int64_t n = ring_.modulus();
      SmallMatrix a(ne, nv, 0);
      detail::Row64 b(ne, 0);
      for (std::size_t i = 0; i < ne; ++i) {
        const auto &e = equations_[i];
        std::int64_t scale = n / e.modulus.get_si();
        for (const auto &[v, c] : e.terms) a(i, v) = floor_mod(a(i, v) + scale * c.get_si(), n);
        if (inhomogeneous) b[i] = floor_mod(scale * e.rhs.get_si(), n);
      }
      auto s = detail::mod_solve(a, b, n);
      for (auto &k : s.kernel) {
        Vector v;
        for (auto x : k) v.push_back(from_int64(x));
        v = reduce_vector(std::move(v));
        if (!is_zero(v)) out.kernel.push_back(std::move(v));
      }
      if (!s.solvable) return inhomogeneous ? std::nullopt : std::optional<Solution>(out);
      for (auto x : s.particular) out.particular.push_back(from_int64(x));
    } else {
      std::size_t slack = 0;
      for (const auto &e : equations_)
        if (e.modulus != 0) ++slack;
      IntMatrix a(ne, nv + slack);
      Vector b(ne, 0);
      std::size_t sc = nv;
      for (std::size_t i = 0; i < ne; ++i) {
        const auto &e = equations_[i];
        for (const auto &[v, c] : e.terms) a(i, v) += c;
        if (e.modulus != 0) a(i, sc++) = e.modulus;
        if (inhomogeneous) b[i] = e.rhs;
      }
      auto s = detail::int_solve(a, b);
      for (auto &k : s.kernel) {
        Vector v = reduce_vector(Vector(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(nv)));
        if (!is_zero(v)) out.kernel.push_back(std::move(v));
      }
      if (!s.solvable) return inhomogeneous ? std::nullopt : std::optional<Solution>(out);
      out.particular.assign(s.particular.begin(), s.particular.begin() + static_cast<std::ptrdiff_t>(nv));
    }
    out.particular = reduce_vector(std::move(out.particular));
    return out;
  }

  RingSpec ring_;
  Vector moduli_;
  std::vector<Equation> equations_;
};

} // namespace homkit
