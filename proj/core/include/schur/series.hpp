#ifndef SCHUR_SERIES_HPP
#define SCHUR_SERIES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/polynomial.hpp"

namespace schur {

// Power series in z truncated at an explicit order N: exactly the
// coefficients of z^0 .. z^N are tracked. Mixing two series takes the
// minimum of the two orders; the order is never widened implicitly.
// The coefficient domain C is a compile-time tag (Rational, RatPolynomial),
// so cross-domain arithmetic is rejected by the type system.
template <typename C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : order_(check_order(order)) {
    coeffs_.assign(static_cast<std::size_t>(order_) + 1, C(0));
  }

  TruncatedSeries(int order, std::vector<C> coeffs) : order_(check_order(order)) {
    coeffs.resize(static_cast<std::size_t>(order_) + 1, C(0));
    coeffs_ = std::move(coeffs);
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = C(1);
    return s;
  }

  // c * z^k
  static TruncatedSeries term(int order, C c, int k) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const { return order_; }

  const C& coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("TruncatedSeries: coefficient index");
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<C>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  // Cauchy product through the shared order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
  }

  TruncatedSeries scale(const C& s) const {
    TruncatedSeries r(*this);
    for (auto& v : r.coeffs_) v = v * s;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::domain_error("TruncatedSeries: order must be >= 0");
    return order;
  }

  int order_;
  std::vector<C> coeffs_;
};

// Square root of a series with constant term 1, by coefficient-wise solving
// of t*t = s. Exactness is the caller's concern only in non-field domains;
// both supported domains divide exactly by 2.
template <typename C>
TruncatedSeries<C> sqrt_series(const TruncatedSeries<C>& s) {
  if (!(s.coeff(0) == C(1)))
    throw std::domain_error("sqrt_series: constant term must be 1");
  const int n = s.order();
  std::vector<C> t(static_cast<std::size_t>(n) + 1, C(0));
  t[0] = C(1);
  const C two = C(2);
  for (int i = 1; i <= n; ++i) {
    C acc = s.coeff(i);
    for (int j = 1; j < i; ++j) acc = acc - t[j] * t[i - j];
    t[i] = acc / two;
  }
  return TruncatedSeries<C>(n, std::move(t));
}

// den * result = num through the shared order; den must have an invertible
// (nonzero) constant term.
template <typename C>
TruncatedSeries<C> series_div(const TruncatedSeries<C>& num, const TruncatedSeries<C>& den) {
  if (den.coeff(0) == C(0))
    throw std::domain_error("series_div: denominator has zero constant term");
  const int n = std::min(num.order(), den.order());
  std::vector<C> q(static_cast<std::size_t>(n) + 1, C(0));
  for (int i = 0; i <= n; ++i) {
    C acc = num.coeff(i);
    for (int j = 0; j < i; ++j) acc = acc - q[j] * den.coeff(i - j);
    q[i] = acc / den.coeff(0);
  }
  return TruncatedSeries<C>(n, std::move(q));
}

// Exact division by z^k: the first k coefficients must vanish. The order
// drops by k since nothing is known past the original truncation.
template <typename C>
TruncatedSeries<C> shift_down(const TruncatedSeries<C>& s, int k) {
  if (k < 0 || k > s.order()) throw std::domain_error("shift_down: bad shift");
  for (int i = 0; i < k; ++i)
    if (!(s.coeff(i) == C(0)))
      throw std::domain_error("shift_down: series not divisible by z^k");
  std::vector<C> c;
  c.reserve(static_cast<std::size_t>(s.order() - k) + 1);
  for (int i = k; i <= s.order(); ++i) c.push_back(s.coeff(i));
  return TruncatedSeries<C>(s.order() - k, std::move(c));
}

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<RatPolynomial>;

}  // namespace schur

#endif
