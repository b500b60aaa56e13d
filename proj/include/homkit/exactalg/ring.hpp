#pragma once

#include "homkit/exactalg/integer.hpp"
#include "homkit/exactalg/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homkit {

/// The coefficient ring: Z or Z/n. Moduli are limited to n < 2^31 so that
/// modular kernels can run on 64-bit words.
class RingSpec {
public:
  enum class Kind { Integers, IntegersMod };

  RingSpec() = default;

  static auto integers() -> RingSpec { return RingSpec(); }
  static auto integers_mod(std::int64_t n) -> RingSpec {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    if (n >= (std::int64_t(1) << 31)) throw std::invalid_argument("modulus must be below 2^31");
    RingSpec r;
    r.kind_ = Kind::IntegersMod;
    r.modulus_ = n;
    return r;
  }

  [[nodiscard]] auto kind() const -> Kind { return kind_; }
  [[nodiscard]] auto is_integers() const -> bool { return kind_ == Kind::Integers; }
  [[nodiscard]] auto is_modular() const -> bool { return kind_ == Kind::IntegersMod; }
  [[nodiscard]] auto modulus() const -> std::int64_t {
    if (!is_modular()) throw std::logic_error("Z has no modulus");
    return modulus_;
  }
  /// Invariant factor of a free summand: n over Z/n, 0 over Z.
  [[nodiscard]] auto free_factor() const -> Integer {
    return is_modular() ? from_int64(modulus_) : Integer(0);
  }

  [[nodiscard]] auto reduce(const Integer &a) const -> Integer {
    return is_modular() ? floor_mod(a, from_int64(modulus_)) : a;
  }
  [[nodiscard]] auto reduce(const IntMatrix &a) const -> IntMatrix {
    if (!is_modular()) return a;
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = reduce(r(i, j));
    return r;
  }

  [[nodiscard]] auto to_string() const -> std::string {
    return is_modular() ? "Z/" + std::to_string(modulus_) : "Z";
  }

  friend auto operator==(const RingSpec &a, const RingSpec &b) -> bool {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

private:
  Kind kind_ = Kind::Integers;
  std::int64_t modulus_ = 0;
};

/// Arithmetic over Z on arbitrary precision integers.
struct IntegerArith {
  using value_type = Integer;

  [[nodiscard]] auto reduce(const Integer &a) const -> Integer { return a; }
  [[nodiscard]] auto mul(const Integer &a, const Integer &b) const -> Integer { return a * b; }
  [[nodiscard]] auto add(const Integer &a, const Integer &b) const -> Integer { return a + b; }
  [[nodiscard]] auto sub(const Integer &a, const Integer &b) const -> Integer { return a - b; }
  [[nodiscard]] auto divides(const Integer &a, const Integer &b) const -> bool {
    return homkit::divides(a, b);
  }
  /// q with a*q = b, assuming divides(a, b).
  [[nodiscard]] auto quotient(const Integer &a, const Integer &b) const -> Integer {
    return b / a;
  }
  /// Unit u with u*a the canonical associate; and its inverse.
  [[nodiscard]] auto normalizer(const Integer &a) const -> std::pair<Integer, Integer> {
    return a < 0 ? std::pair<Integer, Integer>{-1, -1} : std::pair<Integer, Integer>{1, 1};
  }
  [[nodiscard]] auto norm(const Integer &a) const -> Integer { return abs(a); }
  [[nodiscard]] auto gcdex(const Integer &a, const Integer &b) const -> Gcdex<Integer> {
    return homkit::gcdex(a, b);
  }
};

/// Arithmetic over Z/n with n < 2^31; values live in [0, n).
struct ModArith {
  using value_type = std::int64_t;
  std::int64_t n;

  [[nodiscard]] auto reduce(std::int64_t a) const -> std::int64_t { return floor_mod(a, n); }
  [[nodiscard]] auto mul(std::int64_t a, std::int64_t b) const -> std::int64_t {
    return floor_mod(a * b, n);
  }
  [[nodiscard]] auto add(std::int64_t a, std::int64_t b) const -> std::int64_t {
    return floor_mod(a + b, n);
  }
  [[nodiscard]] auto sub(std::int64_t a, std::int64_t b) const -> std::int64_t {
    return floor_mod(a - b, n);
  }
  [[nodiscard]] auto divides(std::int64_t a, std::int64_t b) const -> bool {
    return b % homkit::gcd(a, n) == 0;
  }
  [[nodiscard]] auto inverse(std::int64_t u) const -> std::int64_t {
    auto e = homkit::gcdex(floor_mod(u, n), n);
    if (e.g != 1) throw std::domain_error("not a unit");
    return floor_mod(e.s, n);
  }
  /// Unit u with u*a = gcd(a, n) (mod n), found by the stabilisation search.
  [[nodiscard]] auto normalizer(std::int64_t a) const -> std::pair<std::int64_t, std::int64_t> {
    a = floor_mod(a, n);
    if (a == 0) return {1, 1};
    std::int64_t g = homkit::gcd(a, n);
    if (a == g) return {1, 1};
    std::int64_t m = n / g;
    std::int64_t ap = a / g;
    std::int64_t s = m == 1 ? 0 : floor_mod(homkit::gcdex(ap % m, m).s, m);
    for (std::int64_t u = s;; u += m) {
      if (homkit::gcd(u, n) == 1) {
        u = floor_mod(u, n);
        return {u, inverse(u)};
      }
    }
  }
  [[nodiscard]] auto quotient(std::int64_t a, std::int64_t b) const -> std::int64_t {
    std::int64_t g = homkit::gcd(a, n);
    auto [u, ui] = normalizer(a);
    return mul(b / g, u);
  }
  [[nodiscard]] auto norm(std::int64_t a) const -> std::int64_t { return homkit::gcd(a, n); }
  [[nodiscard]] auto gcdex(std::int64_t a, std::int64_t b) const -> Gcdex<std::int64_t> {
    auto e = homkit::gcdex(a, b);
    return {reduce(e.g), reduce(e.s), reduce(e.t), reduce(e.u), reduce(e.v)};
  }
};

} // namespace homkit
