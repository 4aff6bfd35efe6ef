#ifndef SCHUR_COUNTING_HPP
#define SCHUR_COUNTING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "schur/polynomial.hpp"

namespace schur {

// Odd prime p together with the exponent n and x = d(p-1), the quantity the
// counting polynomials are evaluated at.
struct PrimeSpec {
  std::int64_t p;
  int n;
  int x;

  // Validates that p is an odd prime and recomputes x = d(p-1).
  static PrimeSpec make(std::int64_t p, int n);
};

// Counts of Schur rings over Z_{p^n} for odd p, as polynomials in x.
//
// Layer values Omega(n,k) come from the mutual recursion
//   Omega(n,0) = sum_{k<n} Omega(k)
//   Omega(n,1) = Omega(n-1)
//   Omega(n,n) = 1
//   Omega(n,k) = sum_{j=k-1}^{n-1} Omega(n-1,j)    (2 <= k <= n)
// and the totals are computed along two independent routes that must agree:
// the layer sum  Omega(n) = Omega(n,0) + (x-1)Omega(n,1) + x sum_{k>=2} Omega(n,k)
// and the Catalan recurrence
//   Omega(n) = x Omega(n-1) + sum_{k=2}^{n} (c_{k-1} x + 1) Omega(n-k).
class OmegaOddTable {
 public:
  const IntPolynomial& omega(int n);             // Catalan-recurrence route
  const IntPolynomial& omega_via_layers(int n);  // layer-sum route
  const IntPolynomial& layer(int n, int k);      // Omega(n,k), 0 <= k <= n

 private:
  void grow_layers(int n);

  std::vector<IntPolynomial> catalan_route_;
  std::vector<IntPolynomial> layer_route_;
  std::vector<std::vector<IntPolynomial>> layers_;
};

// Counts over Z_{2^n}. Layer 1 does not exist (K_2 = Q); layer values are
// Omega(n,k) for k = 0 or 2 <= k <= n plus the companion Omega_s(n,k) for
// 3 <= k <= n (rings mapping onto the two non-cyclotomic fields per layer).
// The two total routes again must agree.
class OmegaTwoTable {
 public:
  const BigInt& omega(int n);             // Catalan/Schroeder-recurrence route
  const BigInt& omega_via_layers(int n);  // layer-sum route
  const BigInt& layer(int n, int k);
  const BigInt& layer_s(int n, int k);

 private:
  void grow(int n);

  std::vector<BigInt> recurrence_route_;
  std::vector<BigInt> layer_route_;
  std::vector<std::vector<BigInt>> layers_;    // [n][k], slot k=1 unused
  std::vector<std::vector<BigInt>> layers_s_;  // [n][k], slots k<3 unused
};

// Free-function surface over process-wide memo tables (thread-safe).
IntPolynomial omega_odd(int n);
IntPolynomial omega_odd_via_layers(int n);
IntPolynomial omega_layer_odd(int n, int k);
BigInt omega_odd_eval(const PrimeSpec& spec);

BigInt omega_two(int n);  // accepts the sentinel n = -1 (defined as 0)
BigInt omega_two_via_layers(int n);
BigInt omega_two_layer(int n, int k);
BigInt omega_two_s(int n, int k);

// Closed forms Omega(n,n-1), Omega(n,n-2), Omega(n,n-3) where defined
// (n >= 2, 3, 4 respectively); each must equal omega_layer_odd.
struct ClosedLayerForm {
  int k;
  IntPolynomial value;
};
std::vector<ClosedLayerForm> omega_layer_closed_forms(int n);

// (constant term of Omega(n), F_{n-1}); the two components must be equal.
std::pair<BigInt, BigInt> constant_term_check(int n);

}  // namespace schur

#endif
