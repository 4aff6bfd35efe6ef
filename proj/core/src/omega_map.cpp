#include "schur/omega_map.hpp"

#include <numeric>
#include <stdexcept>

namespace schur {

CyclotomicReducer::CyclotomicReducer(int prime_power_modulus) : modulus_(prime_power_modulus) {
  if (modulus_ < 2) throw std::domain_error("CyclotomicReducer: modulus must be >= 2");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= modulus_; ++d)
    if (modulus_ % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = modulus_;
  p_ = p;
  n_ = 0;
  std::int64_t rest = modulus_;
  while (rest % p_ == 0) {
    rest /= p_;
    ++n_;
  }
  if (rest != 1) throw std::domain_error("CyclotomicReducer: modulus is not a prime power");
  step_ = 1;
  for (int i = 0; i + 1 < n_; ++i) step_ *= static_cast<int>(p_);
  dim_ = static_cast<int>(p_ - 1) * step_;
}

void CyclotomicReducer::reduce_scaled_indicator(const std::vector<int>& set, int scale,
                                                std::vector<std::int64_t>& out) const {
  out.assign(static_cast<std::size_t>(dim_), 0);
  for (int g : set) {
    const int e = static_cast<int>(static_cast<std::int64_t>(scale) * g % modulus_);
    if (e < dim_) {
      ++out[static_cast<std::size_t>(e)];
    } else {
      const int r = e - dim_;
      for (int j = 0; j < static_cast<int>(p_) - 1; ++j)
        --out[static_cast<std::size_t>(r + j * step_)];
    }
  }
}

std::vector<std::int64_t> CyclotomicReducer::reduce_scaled_indicator(const std::vector<int>& set,
                                                                     int scale) const {
  std::vector<std::int64_t> out;
  reduce_scaled_indicator(set, scale, out);
  return out;
}

std::vector<Rational> CyclotomicReducer::reduce(const AlgebraElement& a) const {
  if (a.modulus != modulus_) throw std::invalid_argument("CyclotomicReducer: modulus mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  for (int e = 0; e < modulus_; ++e) {
    const Rational& c = a.coeffs[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (e < dim_) {
      out[static_cast<std::size_t>(e)] += c;
    } else {
      const int r = e - dim_;
      for (int j = 0; j < static_cast<int>(p_) - 1; ++j)
        out[static_cast<std::size_t>(r + j * step_)] -= c;
    }
  }
  return out;
}

std::vector<std::int64_t> CyclotomicReducer::apply_automorphism(
    const std::vector<std::int64_t>& reduced, int m) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    const std::int64_t c = reduced[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int e = static_cast<int>(static_cast<std::int64_t>(m) * i % modulus_);
    if (e < dim_) {
      out[static_cast<std::size_t>(e)] += c;
    } else {
      const int r = e - dim_;
      for (int j = 0; j < static_cast<int>(p_) - 1; ++j)
        out[static_cast<std::size_t>(r + j * step_)] -= c;
    }
  }
  return out;
}

SubgroupOfUnits omega_image(const GroupPartition& ring) {
  const int n = ring.modulus;
  if (n == 1) return SubgroupOfUnits{1, {0}};
  const CyclotomicReducer reducer(n);

  std::vector<std::vector<std::int64_t>> fixed;
  fixed.reserve(ring.blocks.size());
  for (const auto& block : ring.blocks) fixed.push_back(reducer.reduce_scaled_indicator(block, 1));

  std::vector<int> stabilizer;
  std::vector<std::int64_t> scratch;
  for (int m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    bool fixes_all = true;
    for (std::size_t b = 0; b < ring.blocks.size() && fixes_all; ++b) {
      if (ring.blocks[b].size() == 1 && ring.blocks[b][0] == 0) continue;
      reducer.reduce_scaled_indicator(ring.blocks[b], m, scratch);
      fixes_all = scratch == fixed[b];
    }
    if (fixes_all) stabilizer.push_back(m);
  }
  return SubgroupOfUnits{n, std::move(stabilizer)};
}

bool kernel_member(const AlgebraElement& alpha) {
  const CyclotomicReducer reducer(alpha.modulus);
  for (const Rational& c : reducer.reduce(alpha))
    if (!(c == 0)) return false;
  return true;
}

}  // namespace schur
