#include "schur/polynomial.hpp"

#include <sstream>

namespace schur {

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    BigInt c = p.coeff(d);
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
      c = -c;
    } else if (!first) {
      out << "+";
    }
    if (d == 0 || c != 1) out << c.str();
    if (d >= 1) {
      out << "x";
      if (d > 1) out << "^" << d;
    }
    first = false;
  }
  return out.str();
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

}  // namespace schur
