#include "schur/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace schur {

namespace {

// Shared builder for the two triangles. `carry` is the weight of the
// s_{(j-1)(k-1)} term: 0 for Catalan, 1 for super-Catalan.
TriangularArray build_triangle(int rows, int carry) {
  if (rows < 1) throw std::domain_error("triangle: rows must be >= 1");
  TriangularArray t;
  t.rows.reserve(static_cast<std::size_t>(rows));
  for (int k = 1; k <= rows; ++k) {
    std::vector<BigInt> row(static_cast<std::size_t>(k));
    row[0] = 1;
    for (int j = 1; j < k; ++j) {
      const auto& prev = t.rows.back();  // row k-1, columns 0..k-2
      // c_{j(k-1)} with the extended diagonal c_{(k-1)(k-1)} = c_{(k-2)(k-1)}.
      const BigInt& left = prev[static_cast<std::size_t>(std::min(j, k - 2))];
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + left;
      if (carry != 0)
        row[static_cast<std::size_t>(j)] +=
            prev[static_cast<std::size_t>(std::min(j - 1, k - 2))];
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

BigInt catalan(int i) {
  if (i < 0) throw std::domain_error("catalan: negative index");
  BigInt c = binomial(2 * i, i);
  c /= i + 1;  // exact
  return c;
}

BigInt schroder(int i) {
  if (i < 0) throw std::domain_error("schroder: negative index");
  if (i == 0) return 1;
  // Diagonal s_{(i-1)i} of the super-Catalan triangle, doubled. The table is
  // grown on demand and kept for reuse; guarded for concurrent callers.
  static std::mutex mutex;
  static TriangularArray table;
  std::lock_guard<std::mutex> lock(mutex);
  if (table.row_count() < i) table = super_catalan_triangle(std::max(i, 2 * table.row_count()));
  return 2 * table.at(i - 1, i);
}

BigInt fibonacci(int n) {
  if (n < 0) throw std::domain_error("fibonacci: negative index");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

TriangularArray catalan_triangle(int rows) { return build_triangle(rows, 0); }

TriangularArray super_catalan_triangle(int rows) { return build_triangle(rows, 1); }

}  // namespace schur
