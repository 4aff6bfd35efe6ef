#include "schur/counting.hpp"

#include <mutex>
#include <stdexcept>

#include "schur/sequences.hpp"

namespace schur {

namespace {

const IntPolynomial kOne(1);
const IntPolynomial kX = IntPolynomial::x();

}  // namespace

PrimeSpec PrimeSpec::make(std::int64_t p, int n) {
  if (p == 2 || !is_prime(p)) throw std::domain_error("PrimeSpec: p must be an odd prime");
  if (n < 0) throw std::domain_error("PrimeSpec: n must be >= 0");
  return PrimeSpec{p, n, divisor_count(p - 1)};
}

// ---------------------------------------------------------------------------
// Odd primes: polynomials in x.

const IntPolynomial& OmegaOddTable::omega(int n) {
  if (n < 0) throw std::domain_error("omega_odd: negative n");
  while (static_cast<int>(catalan_route_.size()) <= n) {
    const int m = static_cast<int>(catalan_route_.size());
    if (m == 0) {
      catalan_route_.push_back(kOne);
      continue;
    }
    IntPolynomial acc = kX * catalan_route_[m - 1];
    for (int k = 2; k <= m; ++k) {
      IntPolynomial weight = IntPolynomial::constant(catalan(k - 1)) * kX + kOne;
      acc += weight * catalan_route_[m - k];
    }
    catalan_route_.push_back(std::move(acc));
  }
  return catalan_route_[static_cast<std::size_t>(n)];
}

void OmegaOddTable::grow_layers(int n) {
  while (static_cast<int>(layers_.size()) <= n) {
    const int m = static_cast<int>(layers_.size());
    std::vector<IntPolynomial> row(static_cast<std::size_t>(m) + 1);
    if (m == 0) {
      row[0] = kOne;  // the group ring over the trivial group maps onto Q
    } else {
      row[0] = IntPolynomial();
      for (int j = 0; j < m; ++j) row[0] += omega_via_layers(j);
      row[1] = omega_via_layers(m - 1);
      for (int k = 2; k <= m; ++k) {
        IntPolynomial acc;
        for (int j = k - 1; j <= m - 1; ++j) acc += layers_[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(k)] = std::move(acc);
      }
      row[static_cast<std::size_t>(m)] = kOne;
    }
    layers_.push_back(std::move(row));
  }
}

const IntPolynomial& OmegaOddTable::layer(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("omega_layer_odd: need 0 <= k <= n");
  grow_layers(n);
  return layers_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const IntPolynomial& OmegaOddTable::omega_via_layers(int n) {
  if (n < 0) throw std::domain_error("omega_odd: negative n");
  while (static_cast<int>(layer_route_.size()) <= n) {
    const int m = static_cast<int>(layer_route_.size());
    if (m == 0) {
      layer_route_.push_back(kOne);
      continue;
    }
    grow_layers(m);
    // One field in layer 0, x-1 fields in layer 1, x in every layer above.
    IntPolynomial acc = layer(m, 0) + (kX - kOne) * layer(m, 1);
    IntPolynomial upper;
    for (int k = 2; k <= m; ++k) upper += layer(m, k);
    acc += kX * upper;
    layer_route_.push_back(std::move(acc));
  }
  return layer_route_[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// p = 2: exact integers.

const BigInt& OmegaTwoTable::omega(int n) {
  if (n == -1) {
    static const BigInt kZero = 0;
    return kZero;
  }
  if (n < 0) throw std::domain_error("omega_two: negative n");
  while (static_cast<int>(recurrence_route_.size()) <= n) {
    const int m = static_cast<int>(recurrence_route_.size());
    if (m <= 1) {
      recurrence_route_.push_back(1);
      continue;
    }
    auto omega_at = [&](int i) -> BigInt {
      return i < 0 ? BigInt(0) : recurrence_route_[static_cast<std::size_t>(i)];
    };
    BigInt acc = 0;
    for (int k = 1; k <= 3; ++k) acc += BigInt(1 << k) * omega_at(m - k);
    acc -= catalan(m - 1) + schroder(m - 1);
    for (int k = 4; k <= m; ++k) {
      BigInt weight = catalan(k - 1) + schroder(k - 1);
      for (int j = 1; j <= k - 3; ++j) weight -= catalan(j) + schroder(j);
      acc += weight * omega_at(m - k);
    }
    recurrence_route_.push_back(std::move(acc));
  }
  return recurrence_route_[static_cast<std::size_t>(n)];
}

void OmegaTwoTable::grow(int n) {
  while (static_cast<int>(layers_.size()) <= n) {
    const int m = static_cast<int>(layers_.size());
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
    std::vector<BigInt> row_s(static_cast<std::size_t>(m) + 1, BigInt(0));
    if (m == 0) {
      row[0] = 1;
    } else {
      for (int j = 0; j < m; ++j) row[0] += omega_via_layers(j);
      if (m >= 2) {
        // Second layer: the base case of the p = 2 recursion.
        row[2] = m == 2 ? BigInt(1)
                        : omega_via_layers(m - 1) - layers_[static_cast<std::size_t>(m - 2)][0];
      }
      const auto& prev = layers_[static_cast<std::size_t>(m - 1)];
      for (int k = 3; k <= m; ++k) {
        BigInt acc = 0;
        for (int j = k - 1; j <= m - 1; ++j) acc += prev[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(k)] = std::move(acc);
      }
      const auto& prev_s = layers_s_[static_cast<std::size_t>(m - 1)];
      for (int k = 3; k <= m; ++k) {
        if (k == m) {
          row_s[static_cast<std::size_t>(k)] = 1;
        } else if (k == 3) {
          BigInt acc = prev[2];
          for (int j = 3; j <= m - 1; ++j) acc += 2 * prev_s[static_cast<std::size_t>(j)];
          row_s[3] = std::move(acc);
        } else {
          BigInt acc = prev_s[static_cast<std::size_t>(k - 1)];
          for (int j = k; j <= m - 1; ++j) acc += 2 * prev_s[static_cast<std::size_t>(j)];
          row_s[static_cast<std::size_t>(k)] = std::move(acc);
        }
      }
    }
    layers_.push_back(std::move(row));
    layers_s_.push_back(std::move(row_s));
  }
}

const BigInt& OmegaTwoTable::layer(int n, int k) {
  if (k == 1) throw std::domain_error("omega_two_layer: there is no first layer for p = 2");
  if (n < 0 || k < 0 || k > n) throw std::domain_error("omega_two_layer: need 0 <= k <= n");
  grow(n);
  return layers_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& OmegaTwoTable::layer_s(int n, int k) {
  if (k < 3 || k > n) throw std::domain_error("omega_two_s: need 3 <= k <= n");
  grow(n);
  return layers_s_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& OmegaTwoTable::omega_via_layers(int n) {
  if (n < 0) throw std::domain_error("omega_two: negative n");
  while (static_cast<int>(layer_route_.size()) <= n) {
    const int m = static_cast<int>(layer_route_.size());
    if (m <= 1) {
      layer_route_.push_back(1);
      continue;
    }
    grow(m);
    BigInt acc = layer(m, 0) + layer(m, 2);
    for (int k = 3; k <= m; ++k) acc += layer(m, k) + 2 * layer_s(m, k);
    layer_route_.push_back(std::move(acc));
  }
  return layer_route_[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Free functions over shared tables.

namespace {

std::mutex g_tables_mutex;
OmegaOddTable& odd_table() {
  static OmegaOddTable t;
  return t;
}
OmegaTwoTable& two_table() {
  static OmegaTwoTable t;
  return t;
}

}  // namespace

IntPolynomial omega_odd(int n) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return odd_table().omega(n);
}

IntPolynomial omega_odd_via_layers(int n) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return odd_table().omega_via_layers(n);
}

IntPolynomial omega_layer_odd(int n, int k) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return odd_table().layer(n, k);
}

BigInt omega_odd_eval(const PrimeSpec& spec) {
  PrimeSpec checked = PrimeSpec::make(spec.p, spec.n);
  if (checked.x != spec.x) throw std::domain_error("omega_odd_eval: stored x does not match d(p-1)");
  return omega_odd(spec.n).eval(BigInt(checked.x));
}

BigInt omega_two(int n) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return two_table().omega(n);
}

BigInt omega_two_via_layers(int n) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return two_table().omega_via_layers(n);
}

BigInt omega_two_layer(int n, int k) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return two_table().layer(n, k);
}

BigInt omega_two_s(int n, int k) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return two_table().layer_s(n, k);
}

std::vector<ClosedLayerForm> omega_layer_closed_forms(int n) {
  if (n < 2) throw std::domain_error("omega_layer_closed_forms: need n >= 2");
  std::vector<ClosedLayerForm> forms;
  // Omega(n,n-1) = x + (n-2)
  forms.push_back({n - 1, kX + IntPolynomial(n - 2)});
  if (n >= 3) {
    // Omega(n,n-2) = x^2 + (n-2)x + C(n-1,2)
    IntPolynomial p = kX * kX + IntPolynomial(n - 2) * kX +
                      IntPolynomial::constant(binomial(n - 1, 2));
    forms.push_back({n - 2, std::move(p)});
  }
  if (n >= 4) {
    // Omega(n,n-3) = x^3 + (n-2)x^2 + (C(n-1,2)+1)x + (C(n,3)-3)
    IntPolynomial p = kX * kX * kX + IntPolynomial(n - 2) * kX * kX +
                      IntPolynomial::constant(binomial(n - 1, 2) + 1) * kX +
                      IntPolynomial::constant(binomial(n, 3) - 3);
    forms.push_back({n - 3, std::move(p)});
  }
  return forms;
}

std::pair<BigInt, BigInt> constant_term_check(int n) {
  if (n < 1) throw std::domain_error("constant_term_check: need n >= 1");
  return {omega_odd(n).coeff(0), fibonacci(n - 1)};
}

}  // namespace schur
