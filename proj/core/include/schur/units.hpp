#ifndef SCHUR_UNITS_HPP
#define SCHUR_UNITS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schur {

// A subgroup of (Z/nZ)* stored extensionally as a sorted residue set.
// For the degenerate modulus 1 the identity residue is 0.
struct SubgroupOfUnits {
  std::int64_t modulus = 1;
  std::vector<int> elements;

  friend bool operator==(const SubgroupOfUnits&, const SubgroupOfUnits&) = default;
  friend auto operator<=>(const SubgroupOfUnits& a, const SubgroupOfUnits& b) {
    if (auto c = a.modulus <=> b.modulus; c != 0) return c;
    return a.elements <=> b.elements;
  }
};

enum class UnitsStructure { trivial, cyclic, klein_tower };  // Z_2 x Z_{2^{k-2}}

struct UnitsGroup {
  std::int64_t modulus;  // p^k
  std::int64_t p;
  int k;
  std::int64_t order;  // phi(p^k)
  UnitsStructure structure;
  std::vector<int> generators;
  std::vector<int> elements;  // all units, sorted
};

// Structure of (Z/p^kZ)*: cyclic of order p^{k-1}(p-1) for odd p, trivial for
// p^k in {1, 2}, Z_2 for modulus 4, and Z_2 x Z_{2^{k-2}} for 2^k with k >= 3.
UnitsGroup units_group(std::int64_t p, int k);

// Complete duplicate-free subgroup list. Odd p: one subgroup per divisor of
// the (cyclic) group order. p = 2: closures of all generator pairs, which is
// exhaustive since every subgroup of Z_2 x Z_{2^{k-2}} is 2-generated.
std::vector<SubgroupOfUnits> all_subgroups(const UnitsGroup& g);

// The minimal k such that h contains every unit congruent to 1 mod p^k;
// equivalently the lattice layer of the fixed field of h. 0 iff h is full.
int layer_of(const SubgroupOfUnits& h);

// Image of h under reduction mod d, for d dividing h's modulus.
SubgroupOfUnits restrict_mod(const SubgroupOfUnits& h, std::int64_t d);

// Units of g whose reduction mod h.modulus lands in h.
SubgroupOfUnits preimage_mod(const UnitsGroup& g, const SubgroupOfUnits& h);

// layer -> number of subfields in that layer of the lattice of Q(zeta_{p^n}).
std::map<int, int> layer_census(std::int64_t p, int n);

// Which of the three fields per 2-power layer a subgroup corresponds to.
// `rationals` covers layer 0; `cyclotomic` is Q(zeta_{2^k}); `real_plus` is
// Q(zeta + zeta^{-1}); `real_minus` is Q(zeta - zeta^{-1}).
enum class FieldKindTwo { rationals, cyclotomic, real_plus, real_minus };
FieldKindTwo field_kind_two(const SubgroupOfUnits& h);

// JSON export of the full subfield lattice:
// {"modulus": M, "subgroups": [{"elements": [...], "layer": L}, ...],
//  "edges": [[i, j], ...]} where [i, j] means field i is covered by field j
// (equivalently subgroup i strictly contains subgroup j with nothing between).
std::string lattice_json(std::int64_t p, int n);

}  // namespace schur

#endif
