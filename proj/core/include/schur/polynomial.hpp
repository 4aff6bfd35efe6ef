#ifndef SCHUR_POLYNOMIAL_HPP
#define SCHUR_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "schur/numeric.hpp"

namespace schur {

// Dense univariate polynomial in x. coeffs[i] is the coefficient of x^i;
// trailing zeros are trimmed, so the zero polynomial is the empty list and
// a nonzero polynomial always ends in a nonzero coefficient.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  explicit Polynomial(long long constant) {
    if (constant != 0) coeffs_.push_back(T(constant));
  }

  static Polynomial constant(T value) {
    Polynomial p;
    if (!(value == 0)) p.coeffs_.push_back(std::move(value));
    return p;
  }

  // coeff * x^degree
  static Polynomial monomial(T coeff, int degree) {
    Polynomial p;
    if (!(coeff == 0)) {
      p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, T(0));
      p.coeffs_.back() = std::move(coeff);
    }
    return p;
  }

  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial operator-() const {
    std::vector<T> c(coeffs_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c(p.coeffs_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  // Division restricted to nonzero constant divisors; the series code divides
  // by leading coefficients and those are always scalars in our domains.
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
    if (b.degree() != 0)
      throw std::domain_error("Polynomial: division only by constant polynomials");
    std::vector<T> c(a.coeffs_);
    for (auto& v : c) v = v / b.coeffs_[0];
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  T eval(const T& point) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

// Canonical descending-degree text form, e.g. "x^3+2x^2+4x+1", "x", "0".
std::string to_string(const IntPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

}  // namespace schur

#endif
