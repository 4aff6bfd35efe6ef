#ifndef SCHUR_SEQUENCES_HPP
#define SCHUR_SEQUENCES_HPP

#include <vector>

#include "schur/numeric.hpp"

namespace schur {

// Triangular array with 1-based rows; row k holds columns j = 0..k-1.
// Column 0 is identically 1. The interior recurrence is the array's
// defining property and differs between the two triangles below.
struct TriangularArray {
  std::vector<std::vector<BigInt>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }

  const std::vector<BigInt>& row(int k) const { return rows.at(static_cast<std::size_t>(k) - 1); }

  // Entry c_{jk} (or s_{jk}): row k >= 1, column 0 <= j < k.
  const BigInt& at(int j, int k) const { return row(k).at(static_cast<std::size_t>(j)); }
};

// i-th Catalan number, (1/(i+1))*C(2i,i), computed exactly.
BigInt catalan(int i);

// i-th large Schroeder number: 1, 2, 6, 22, 90, ... Defined as twice the
// diagonal of the super-Catalan triangle for i >= 1 (equivalently the
// coefficient of z^i in (1-z-sqrt(1-6z+z^2))/(2z)).
BigInt schroder(int i);

BigInt fibonacci(int n);

// Triangle with c_{0k} = 1 and c_{jk} = c_{(j-1)k} + c_{j(k-1)}, where the
// off-table value c_{jj} is read as c_{(j-1)j} (the extended diagonal).
// The printed diagonal of row k is catalan(k).
TriangularArray catalan_triangle(int rows);

// Triangle with s_{0k} = 1 and s_{jk} = s_{(j-1)k} + s_{j(k-1)} + s_{(j-1)(k-1)},
// same extended-diagonal convention. Diagonal of row k doubles to schroder(k).
TriangularArray super_catalan_triangle(int rows);

}  // namespace schur

#endif
