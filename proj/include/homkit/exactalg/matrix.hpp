#pragma once

#include "homkit/exactalg/integer.hpp"

#include <cassert>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace homkit {

/// Dense row-major matrix. Shapes with zero rows or zero columns are valid.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto &e : row) data_.push_back(e);
    }
  }

  static auto identity(std::size_t n) -> Matrix {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }
  [[nodiscard]] auto empty() const -> bool { return data_.empty(); }

  auto operator()(std::size_t i, std::size_t j) -> T & {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  auto operator()(std::size_t i, std::size_t j) const -> const T & {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  [[nodiscard]] auto row(std::size_t i) const -> std::vector<T> {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  [[nodiscard]] auto col(std::size_t j) const -> std::vector<T> {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_col(std::size_t j, const std::vector<T> &c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  static auto from_columns(std::size_t rows, const std::vector<std::vector<T>> &cs)
      -> Matrix {
    Matrix m(rows, cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) m.set_col(j, cs[j]);
    return m;
  }
  static auto from_rows(std::size_t cols, const std::vector<std::vector<T>> &rs)
      -> Matrix {
    Matrix m(rs.size(), cols);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rs[i][j];
    return m;
  }

  [[nodiscard]] auto transpose() const -> Matrix {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] auto block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const -> Matrix {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix &b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  [[nodiscard]] auto is_zero() const -> bool {
    for (const auto &e : data_)
      if (e != 0) return false;
    return true;
  }

  friend auto operator==(const Matrix &a, const Matrix &b) -> bool {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend auto operator*(const Matrix &a, const Matrix &b) -> Matrix {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend auto operator+(const Matrix &a, const Matrix &b) -> Matrix {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  friend auto operator-(const Matrix &a, const Matrix &b) -> Matrix {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }
  friend auto operator-(const Matrix &a) -> Matrix {
    Matrix c = a;
    for (auto &e : c.data_) e = -e;
    return c;
  }
  friend auto operator*(const T &s, const Matrix &a) -> Matrix {
    Matrix c = a;
    for (auto &e : c.data_) e *= s;
    return c;
  }

  friend auto operator<<(std::ostream &os, const Matrix &m) -> std::ostream & {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using SmallMatrix = Matrix<std::int64_t>;

inline auto hstack(const IntMatrix &a, const IntMatrix &b) -> IntMatrix {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

inline auto vstack(const IntMatrix &a, const IntMatrix &b) -> IntMatrix {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

inline auto to_small(const IntMatrix &a, std::int64_t n) -> SmallMatrix {
  SmallMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) = floor_mod(a(i, j), Integer(static_cast<long>(n))).get_si();
  return s;
}

inline auto to_big(const SmallMatrix &a) -> IntMatrix {
  IntMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = from_int64(a(i, j));
  return b;
}

/// Integer determinant by fraction-free elimination (Bareiss).
inline auto determinant(IntMatrix a) -> Integer {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace homkit
