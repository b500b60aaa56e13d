#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace homkit {

using Integer = mpz_class;

inline auto floor_mod(const Integer &a, const Integer &m) -> Integer {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

constexpr auto floor_mod(std::int64_t a, std::int64_t m) -> std::int64_t {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline auto gcd(const Integer &a, const Integer &b) -> Integer {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

constexpr auto gcd(std::int64_t a, std::int64_t b) -> std::int64_t {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline auto lcm(const Integer &a, const Integer &b) -> Integer {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// a | b in Z; 0 divides only 0.
inline auto divides(const Integer &a, const Integer &b) -> bool {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline auto fits_int64(const Integer &a) -> bool {
  return a >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
         a <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

inline auto to_int64(const Integer &a) -> std::int64_t {
  if (a.fits_slong_p()) return a.get_si();
  throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
}

inline auto from_int64(std::int64_t a) -> Integer {
  return Integer(static_cast<long>(a));
}

/// Unimodular 2x2 step: [s t; u v] * (a, b)^T = (g, 0)^T with s*v - t*u = 1.
template <class T> struct Gcdex {
  T g, s, t, u, v;
};

inline auto gcdex(const Integer &a, const Integer &b) -> Gcdex<Integer> {
  if (b == 0) return {a, 1, 0, 0, 1};
  if (a != 0 && divides(a, b)) return {a, 1, 0, -(b / a), 1};
  if (a == 0) return {b, 0, 1, -1, 0};
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return {g, s, t, -(b / g), a / g};
}

constexpr auto gcdex(std::int64_t a, std::int64_t b) -> Gcdex<std::int64_t> {
  if (b == 0) return {a, 1, 0, 0, 1};
  if (a != 0 && b % a == 0) return {a, 1, 0, -(b / a), 1};
  if (a == 0) return {b, 0, 1, -1, 0};
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0, -(b / r0), a / r0};
}

/// Exponent of the prime p in a (a != 0).
inline auto valuation(std::int64_t a, std::int64_t p) -> int {
  int v = 0;
  while (a != 0 && a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline auto prime_factors(std::int64_t n) -> std::vector<std::int64_t> {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline auto ipow(std::int64_t b, int e) -> std::int64_t {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace homkit
