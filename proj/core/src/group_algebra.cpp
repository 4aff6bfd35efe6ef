#include "schur/group_algebra.hpp"

#include <stdexcept>

namespace schur {

namespace {

void check_same_modulus(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("AlgebraElement: modulus mismatch");
}

}  // namespace

AlgebraElement::AlgebraElement(int n, std::vector<Rational> c) : modulus(n), coeffs(std::move(c)) {
  if (modulus < 1 || coeffs.size() != static_cast<std::size_t>(modulus))
    throw std::invalid_argument("AlgebraElement: coefficient vector must have length n");
}

AlgebraElement simple_quantity(const std::vector<int>& set, int modulus) {
  AlgebraElement a(modulus);
  for (int g : set) {
    if (g < 0 || g >= modulus) throw std::invalid_argument("simple_quantity: residue out of range");
    a.coeffs[static_cast<std::size_t>(g)] += 1;
  }
  return a;
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement r(a.modulus);
  for (int g = 0; g < a.modulus; ++g)
    r.coeffs[static_cast<std::size_t>((a.modulus - g) % a.modulus)] = a.coeffs[static_cast<std::size_t>(g)];
  return r;
}

AlgebraElement hadamard(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_modulus(a, b);
  AlgebraElement r(a.modulus);
  for (int g = 0; g < a.modulus; ++g)
    r.coeffs[static_cast<std::size_t>(g)] =
        a.coeffs[static_cast<std::size_t>(g)] * b.coeffs[static_cast<std::size_t>(g)];
  return r;
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_modulus(a, b);
  AlgebraElement r(a.modulus);
  for (int g = 0; g < a.modulus; ++g) {
    if (a.coeffs[static_cast<std::size_t>(g)] == 0) continue;
    for (int h = 0; h < a.modulus; ++h) {
      if (b.coeffs[static_cast<std::size_t>(h)] == 0) continue;
      r.coeffs[static_cast<std::size_t>((g + h) % a.modulus)] +=
          a.coeffs[static_cast<std::size_t>(g)] * b.coeffs[static_cast<std::size_t>(h)];
    }
  }
  return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_modulus(a, b);
  AlgebraElement r(a.modulus);
  for (int g = 0; g < a.modulus; ++g)
    r.coeffs[static_cast<std::size_t>(g)] =
        a.coeffs[static_cast<std::size_t>(g)] + b.coeffs[static_cast<std::size_t>(g)];
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_modulus(a, b);
  AlgebraElement r(a.modulus);
  for (int g = 0; g < a.modulus; ++g)
    r.coeffs[static_cast<std::size_t>(g)] =
        a.coeffs[static_cast<std::size_t>(g)] - b.coeffs[static_cast<std::size_t>(g)];
  return r;
}

}  // namespace schur
