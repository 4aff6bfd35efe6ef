#ifndef SCHUR_SCHUR_RING_HPP
#define SCHUR_SCHUR_RING_HPP

#include <optional>
#include <string>

#include "schur/partition.hpp"
#include "schur/units.hpp"

namespace schur {

// Verdict of the Wielandt axiom check. `condition` is 0 when the partition
// is a Schur ring, otherwise the violated condition:
//   1: the identity 0 is not a singleton block
//   2: the block set is not closed under negation mod n
//   3: some product of class sums is not constant on some block
struct SchurCheck {
  bool ok = false;
  int condition = 0;
  int block_i = -1, block_j = -1, block_k = -1;
  int witness_g = -1, witness_g2 = -1;
  std::string detail;
};

// Checks the three Wielandt conditions. Throws std::invalid_argument if the
// input is not a valid partition of Z_n at all.
SchurCheck is_schur_ring(const GroupPartition& p);

struct SchurRing {
  GroupPartition partition;
  bool verified = false;
};

// Runs the checker and wraps; throws std::invalid_argument when the check fails.
SchurRing verify_ring(GroupPartition p);

SchurRing trivial_ring(int n);    // {{0}, Z_n \ {0}}
SchurRing group_ring(int n);      // singletons
SchurRing rational_ring(int n);   // blocks = layers L_d, d | n
SchurRing symmetric_ring(int n);  // inverse classes {g, -g}
SchurRing orbit_ring(const SubgroupOfUnits& h);  // orbits of g -> mg, m in h

// True when the (unique) subgroup of order d in Z_n is a union of blocks.
bool is_ring_subgroup(const GroupPartition& p, int d);

// S_H: the partition restricted to the order-h subgroup, relabeled to Z_h.
// Empty when that subgroup is not a union of blocks.
std::optional<GroupPartition> try_restrict_to_subgroup(const GroupPartition& p, int h);

// pi(S): block images under Z_n -> Z_{n/k}. Empty when the images do not
// form a partition (they always do when the order-k subgroup is a ring
// subgroup of a Schur ring).
std::optional<GroupPartition> try_project_quotient(const GroupPartition& p, int k);

// Wedge product over the chain 1 < K <= H < G with |K| = k, H = support of s,
// G = Z_{k * t.modulus}. Compatibility: K a ring subgroup of s, H/K one of t,
// and the projection of s equals t restricted to H/K.
bool wedge_compatible(const GroupPartition& s, int k, const GroupPartition& t);

// Raw block assembly, no axiom check: s's blocks embedded into H plus the
// preimages of t's blocks outside H/K. Preconditions as for wedge_compatible.
GroupPartition wedge_blocks(const GroupPartition& s, int k, const GroupPartition& t);

SchurRing wedge_product(const SchurRing& s, int k, const SchurRing& t);

// Wedge with K = H: s over Z_m on the normal subgroup, t inflated from the
// quotient Z_{n/m}.
SchurRing wreath_product(const SchurRing& s, const SchurRing& t);

// Tensor-style product over coprime moduli via the CRT identification.
SchurRing dot_product(const SchurRing& s, const SchurRing& t);

// Finest common coarsening of the two partitions (the algebra S cap T).
SchurRing intersect_rings(const SchurRing& s, const SchurRing& t);

}  // namespace schur

#endif
