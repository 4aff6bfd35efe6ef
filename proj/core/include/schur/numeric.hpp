#ifndef SCHUR_NUMERIC_HPP
#define SCHUR_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace schur {

// Exact arithmetic substrate. Everything downstream (polynomials, series,
// group algebra coefficients) is built on these; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// d(m): number of positive divisors.
inline int divisor_count(std::int64_t m) {
  if (m <= 0) throw std::domain_error("divisor_count: argument must be positive");
  int count = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient after every step
  }
  return r;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base)
      throw std::overflow_error("ipow: result does not fit in 64 bits");
    r *= base;
  }
  return r;
}

// (p, k) with m = p^k, or nothing when m is not a prime power. m = 1 maps to
// (2, 0) by convention.
struct PrimePower {
  std::int64_t p;
  int k;
};

inline std::optional<PrimePower> factor_prime_power(std::int64_t m) {
  if (m < 1) return std::nullopt;
  if (m == 1) return PrimePower{2, 0};
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, k};
}

}  // namespace schur

#endif
