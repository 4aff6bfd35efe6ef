#ifndef SCHUR_GENFUN_HPP
#define SCHUR_GENFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "schur/counting.hpp"
#include "schur/series.hpp"

namespace schur {

struct GfReport {
  std::string which;  // "odd" or "two"
  int order = 0;
  bool ok = false;
  std::optional<int> first_mismatch_index;
};

// {"case": ..., "order": ..., "ok": ..., "first_mismatch_index": ...}
std::string to_json(const GfReport& report);

// Checks F(z) * D(z) = 2(1-z) through the given order, where F = sum Omega(n) z^n
// over Q[x] and D = -2z^2 + (x-2)z - (x-2) + x(1-z)sqrt(1-4z). Verification is
// by cross-multiplication; no division of polynomial coefficients is needed.
GfReport verify_gf_odd(int order);
GfReport verify_gf_odd(const std::vector<IntPolynomial>& omega, int order);

// p = 2 closed form: with A = 2 - z - sqrt(1-4z) - sqrt(1-6z+z^2), checks
// F * [A(1-z-z^2) + 2(z^3+z^2+z-1)] = A(1-z) + 2(z^2-1) through the order.
GfReport verify_gf_two(int order);
GfReport verify_gf_two(const std::vector<BigInt>& omega, int order);

// (1 - sqrt(1-4z)) / (2z): coefficient i is catalan(i).
RationalSeries expand_catalan_gf(int order);

// (1 - z - sqrt(1-6z+z^2)) / (2z): coefficient i is schroder(i).
RationalSeries expand_schroder_gf(int order);

}  // namespace schur

#endif
