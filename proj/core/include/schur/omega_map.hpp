#ifndef SCHUR_OMEGA_MAP_HPP
#define SCHUR_OMEGA_MAP_HPP

#include <cstdint>
#include <vector>

#include "schur/group_algebra.hpp"
#include "schur/partition.hpp"
#include "schur/units.hpp"

namespace schur {

// Arithmetic in Q[x]/Phi_{p^n}(x), the image of the omega map. Exponent
// vectors of length p^n are folded onto the power basis x^0..x^{phi-1} using
// Phi_{p^n}(x) = sum_{j=0}^{p-1} x^{j p^{n-1}}, i.e. a top-segment exponent
// q p^{n-1} + r with q = p-1 rewrites to minus the sum over j < p-1 of
// x^{r + j p^{n-1}}.
class CyclotomicReducer {
 public:
  explicit CyclotomicReducer(int prime_power_modulus);  // requires p^n, n >= 1

  int modulus() const { return modulus_; }
  std::int64_t prime() const { return p_; }
  int exponent() const { return n_; }
  int dim() const { return dim_; }

  // Reduction of sum over g in set of x^{(scale * g) mod p^n}.
  void reduce_scaled_indicator(const std::vector<int>& set, int scale,
                               std::vector<std::int64_t>& out) const;
  std::vector<std::int64_t> reduce_scaled_indicator(const std::vector<int>& set, int scale) const;

  std::vector<Rational> reduce(const AlgebraElement& a) const;

  // The Galois action sigma_m on a reduced vector: scale exponents by m,
  // then fold back onto the power basis.
  std::vector<std::int64_t> apply_automorphism(const std::vector<std::int64_t>& reduced,
                                               int m) const;

 private:
  int modulus_;
  std::int64_t p_;
  int n_;
  int dim_;
  int step_;  // p^{n-1}
};

// The subgroup H <= (Z/p^nZ)* of automorphisms fixing omega(C-bar) for every
// block C; by the Galois correspondence omega(S) = K^H.
SubgroupOfUnits omega_image(const GroupPartition& ring);

// True iff alpha lies in ker(omega), i.e. reduces to 0 mod Phi_{p^n}.
bool kernel_member(const AlgebraElement& alpha);

}  // namespace schur

#endif
