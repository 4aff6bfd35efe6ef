#ifndef SCHUR_GROUP_ALGEBRA_HPP
#define SCHUR_GROUP_ALGEBRA_HPP

#include <vector>

#include "schur/numeric.hpp"

namespace schur {

// Element of Q[Z_n]: coeffs[g] is the coefficient of z^g. The group is
// written additively with identity 0; the paper's z^k is residue k.
struct AlgebraElement {
  int modulus = 1;
  std::vector<Rational> coeffs;

  explicit AlgebraElement(int n) : modulus(n), coeffs(static_cast<std::size_t>(n)) {}
  AlgebraElement(int n, std::vector<Rational> c);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// C-bar: the sum of z^g over g in the set.
AlgebraElement simple_quantity(const std::vector<int>& set, int modulus);

// The * involution: negates exponents mod n.
AlgebraElement star(const AlgebraElement& a);

// Pointwise (Hadamard) product.
AlgebraElement hadamard(const AlgebraElement& a, const AlgebraElement& b);

// Group-algebra product: cyclic convolution over Z_n.
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace schur

#endif
