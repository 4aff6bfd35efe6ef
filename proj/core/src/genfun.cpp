#include "schur/genfun.hpp"

#include <json.hpp>

namespace schur {

namespace {

RationalSeries radical_4z(int order) {
  // 1 - 4z
  RationalSeries s = RationalSeries::one(order) - RationalSeries::term(order, Rational(4), 1);
  return sqrt_series(s);
}

RationalSeries radical_6z(int order) {
  // 1 - 6z + z^2
  RationalSeries s = RationalSeries::one(order) - RationalSeries::term(order, Rational(6), 1) +
                     RationalSeries::term(order, Rational(1), 2);
  return sqrt_series(s);
}

GfReport compare(std::string which, int order, const auto& lhs, const auto& rhs) {
  GfReport report{std::move(which), order, true, std::nullopt};
  for (int i = 0; i <= order; ++i) {
    if (!(lhs.coeff(i) == rhs.coeff(i))) {
      report.ok = false;
      report.first_mismatch_index = i;
      break;
    }
  }
  return report;
}

}  // namespace

std::string to_json(const GfReport& report) {
  nlohmann::json j;
  j["case"] = report.which;
  j["order"] = report.order;
  j["ok"] = report.ok;
  if (report.first_mismatch_index) j["first_mismatch_index"] = *report.first_mismatch_index;
  return j.dump();
}

GfReport verify_gf_odd(int order) {
  std::vector<IntPolynomial> omega;
  omega.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) omega.push_back(omega_odd(n));
  return verify_gf_odd(omega, order);
}

GfReport verify_gf_odd(const std::vector<IntPolynomial>& omega, int order) {
  if (order < 1) throw std::domain_error("verify_gf_odd: order must be >= 1");
  std::vector<RatPolynomial> coeffs;
  coeffs.reserve(omega.size());
  for (const auto& p : omega) coeffs.push_back(to_rational(p));
  PolySeries f(order, std::move(coeffs));

  const RatPolynomial x = RatPolynomial::x();
  const RatPolynomial one(1);

  // sqrt(1-4z) with constant polynomial coefficients
  PolySeries radical = sqrt_series(PolySeries::one(order) -
                                   PolySeries::term(order, RatPolynomial(4), 1));

  // -2z^2 + (x-2)z - (x-2)
  PolySeries den = PolySeries::term(order, RatPolynomial(-2), 2) +
                   PolySeries::term(order, x - RatPolynomial(2), 1) -
                   PolySeries::term(order, x - RatPolynomial(2), 0);
  // + x(1-z) sqrt(1-4z)
  PolySeries x_one_minus_z =
      PolySeries::term(order, x, 0) - PolySeries::term(order, x, 1);
  den = den + x_one_minus_z * radical;

  PolySeries numerator = PolySeries::term(order, RatPolynomial(2), 0) -
                         PolySeries::term(order, RatPolynomial(2), 1);

  return compare("odd", order, f * den, numerator);
}

GfReport verify_gf_two(int order) {
  std::vector<BigInt> omega;
  omega.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) omega.push_back(omega_two(n));
  return verify_gf_two(omega, order);
}

GfReport verify_gf_two(const std::vector<BigInt>& omega, int order) {
  if (order < 1) throw std::domain_error("verify_gf_two: order must be >= 1");
  std::vector<Rational> coeffs;
  coeffs.reserve(omega.size());
  for (const auto& v : omega) coeffs.emplace_back(v);
  RationalSeries f(order, std::move(coeffs));

  auto term = [order](long long c, int k) { return RationalSeries::term(order, Rational(c), k); };

  // A = 2 - z - sqrt(1-4z) - sqrt(1-6z+z^2)
  RationalSeries a = term(2, 0) - term(1, 1) - radical_4z(order) - radical_6z(order);

  RationalSeries numerator = a * (term(1, 0) - term(1, 1)) + term(2, 2) - term(2, 0);
  RationalSeries den = a * (term(1, 0) - term(1, 1) - term(1, 2)) +
                       term(2, 3) + term(2, 2) + term(2, 1) - term(2, 0);

  return compare("two", order, f * den, numerator);
}

RationalSeries expand_catalan_gf(int order) {
  if (order < 0) throw std::domain_error("expand_catalan_gf: order must be >= 0");
  // Work one order higher so the division by z keeps the requested order.
  const int inner = order + 1;
  RationalSeries numerator = RationalSeries::one(inner) - radical_4z(inner);
  return shift_down(numerator, 1).scale(Rational(1, 2));
}

RationalSeries expand_schroder_gf(int order) {
  if (order < 0) throw std::domain_error("expand_schroder_gf: order must be >= 0");
  const int inner = order + 1;
  RationalSeries numerator = RationalSeries::one(inner) -
                             RationalSeries::term(inner, Rational(1), 1) - radical_6z(inner);
  return shift_down(numerator, 1).scale(Rational(1, 2));
}

}  // namespace schur
