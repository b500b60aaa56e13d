#pragma once

#include "homkit/exactalg.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace homkit {

using Element = std::vector<Integer>;

/// A finitely presented module in invariant-factor form: the direct sum of
/// R/(d_i) with d_1 | d_2 | ... . Over Z/n every d_i divides n (d_i = n is a
/// free summand); over Z the free summands carry d_i = 0 and come last.
class FpModule {
public:
  FpModule() = default;
  explicit FpModule(RingSpec ring) : ring_(ring) {}

  static auto from_factors(RingSpec ring, std::vector<Integer> factors) -> FpModule {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Integer &d = factors[i];
      if (ring.is_modular()) {
        if (d <= 1 || !divides(d, from_int64(ring.modulus())))
          throw std::invalid_argument("invariant factor " + d.get_str() + " does not divide " +
                                      std::to_string(ring.modulus()) + " or is a unit");
      } else if (d < 0 || d == 1) {
        throw std::invalid_argument("invariant factor " + d.get_str() + " is not canonical");
      }
      if (i > 0 && !divides(factors[i - 1], d))
        throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
    FpModule m(ring);
    m.factors_ = std::move(factors);
    return m;
  }
  static auto zero(RingSpec ring) -> FpModule { return FpModule(ring); }
  static auto free(RingSpec ring, std::size_t rank) -> FpModule {
    return from_factors(ring, std::vector<Integer>(rank, ring.free_factor()));
  }
  static auto cyclic(RingSpec ring, const Integer &d) -> FpModule {
    Integer g = ring.is_modular() ? gcd(d, from_int64(ring.modulus())) : Integer(abs(d));
    if (g == 1) return zero(ring);
    return from_factors(ring, {g});
  }

  [[nodiscard]] auto ring() const -> const RingSpec & { return ring_; }
  [[nodiscard]] auto factors() const -> const std::vector<Integer> & { return factors_; }
  [[nodiscard]] auto factor(std::size_t i) const -> const Integer & { return factors_[i]; }
  /// Number of canonical generators.
  [[nodiscard]] auto rank() const -> std::size_t { return factors_.size(); }
  [[nodiscard]] auto is_zero() const -> bool { return factors_.empty(); }
  [[nodiscard]] auto is_finite() const -> bool {
    for (const auto &d : factors_)
      if (d == 0) return false;
    return true;
  }
  [[nodiscard]] auto cardinality() const -> std::optional<Integer> {
    Integer c = 1;
    for (const auto &d : factors_) {
      if (d == 0) return std::nullopt;
      c *= d;
    }
    return c;
  }
  /// Element count as a machine word; throws for infinite or huge modules.
  [[nodiscard]] auto size() const -> std::uint64_t {
    auto c = cardinality();
    if (!c || !c->fits_ulong_p()) throw std::domain_error("module is not small and finite");
    return c->get_ui();
  }

  [[nodiscard]] auto reduce(Element x) const -> Element {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (factors_[i] != 0) x[i] = floor_mod(x[i], factors_[i]);
    return x;
  }
  [[nodiscard]] auto zero_element() const -> Element { return Element(rank(), 0); }
  [[nodiscard]] auto is_zero_element(const Element &x) const -> bool {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (factors_[i] == 0 ? x[i] != 0 : !divides(factors_[i], x[i])) return false;
    return true;
  }

  [[nodiscard]] auto to_string() const -> std::string {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << " + ";
      if (factors_[i] == 0) os << "Z";
      else os << "Z/" << factors_[i];
    }
    return os.str();
  }

  friend auto operator==(const FpModule &a, const FpModule &b) -> bool {
    return a.ring_ == b.ring_ && a.factors_ == b.factors_;
  }

private:
  RingSpec ring_;
  std::vector<Integer> factors_;
};

/// Reduces row i of a matrix modulo the i-th factor of the target.
inline auto reduce_rows(const FpModule &target, IntMatrix m) -> IntMatrix {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer &e = target.factor(i);
    if (e == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = floor_mod(m(i, j), e);
  }
  return m;
}

/// Does d * x vanish in the cyclic summand R/(e)?
inline auto annihilates(const Integer &d, const Integer &x, const Integer &e) -> bool {
  if (e == 0) return d == 0 ? true : x == 0;
  return divides(e, d * x);
}

/// A homomorphism given by its matrix against canonical generators: column j
/// is the image of source generator j.
class ModuleMap {
public:
  ModuleMap() = default;
  ModuleMap(FpModule source, FpModule target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw std::invalid_argument("map between modules over different rings");
    if (matrix.rows() != target_.rank() || matrix.cols() != source_.rank())
      throw std::invalid_argument("map matrix has the wrong shape");
    matrix_ = reduce_rows(target_, std::move(matrix));
    for (std::size_t j = 0; j < source_.rank(); ++j)
      for (std::size_t i = 0; i < target_.rank(); ++i)
        if (!annihilates(source_.factor(j), matrix_(i, j), target_.factor(i)))
          throw std::invalid_argument("map is not well defined on generator " + std::to_string(j));
  }

  /// Skips the well-definedness check; for results of operations on valid maps.
  static auto trusted(FpModule source, FpModule target, IntMatrix matrix) -> ModuleMap {
    ModuleMap f;
    f.matrix_ = reduce_rows(target, std::move(matrix));
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    return f;
  }
  static auto identity(const FpModule &m) -> ModuleMap {
    return trusted(m, m, IntMatrix::identity(m.rank()));
  }
  static auto zero(const FpModule &s, const FpModule &t) -> ModuleMap {
    return trusted(s, t, IntMatrix(t.rank(), s.rank()));
  }

  [[nodiscard]] auto source() const -> const FpModule & { return source_; }
  [[nodiscard]] auto target() const -> const FpModule & { return target_; }
  [[nodiscard]] auto matrix() const -> const IntMatrix & { return matrix_; }
  [[nodiscard]] auto is_zero() const -> bool { return matrix_.is_zero(); }

  [[nodiscard]] auto apply(const Element &x) const -> Element {
    Element y(target_.rank(), 0);
    for (std::size_t i = 0; i < target_.rank(); ++i)
      for (std::size_t j = 0; j < source_.rank(); ++j) y[i] += matrix_(i, j) * x[j];
    return target_.reduce(std::move(y));
  }

  [[nodiscard]] auto scaled(const Integer &c) const -> ModuleMap {
    return trusted(source_, target_, c * matrix_);
  }

  friend auto operator==(const ModuleMap &a, const ModuleMap &b) -> bool {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }
  /// Composition g * f = g after f.
  friend auto operator*(const ModuleMap &g, const ModuleMap &f) -> ModuleMap {
    if (!(f.target_ == g.source_)) throw std::invalid_argument("composition of non-composable maps");
    return trusted(f.source_, g.target_, g.matrix_ * f.matrix_);
  }
  friend auto operator+(const ModuleMap &a, const ModuleMap &b) -> ModuleMap {
    check_parallel(a, b);
    return trusted(a.source_, a.target_, a.matrix_ + b.matrix_);
  }
  friend auto operator-(const ModuleMap &a, const ModuleMap &b) -> ModuleMap {
    check_parallel(a, b);
    return trusted(a.source_, a.target_, a.matrix_ - b.matrix_);
  }
  friend auto operator-(const ModuleMap &a) -> ModuleMap {
    return trusted(a.source_, a.target_, -a.matrix_);
  }

private:
  static void check_parallel(const ModuleMap &a, const ModuleMap &b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_))
      throw std::invalid_argument("sum of maps with different source or target");
  }

  FpModule source_;
  FpModule target_;
  IntMatrix matrix_;
};

} // namespace homkit
