#ifndef SCHUR_PARTITION_HPP
#define SCHUR_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace schur {

// Partition of Z_n = {0, ..., n-1}. Canonical form: every block sorted
// ascending, blocks ordered by least element (so the block containing 0 is
// first). Canonical form is the equality and deduplication key everywhere.
struct GroupPartition {
  int modulus = 0;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const GroupPartition&, const GroupPartition&) = default;
  friend auto operator<=>(const GroupPartition& a, const GroupPartition& b) {
    if (auto c = a.modulus <=> b.modulus; c != 0) return c;
    return a.blocks <=> b.blocks;
  }
};

// Validates the partition invariants (nonempty disjoint blocks covering Z_n)
// and returns the canonical form. Throws std::invalid_argument on malformed input.
GroupPartition make_partition(int modulus, std::vector<std::vector<int>> blocks);

// element -> index of its block (partition must be valid).
std::vector<int> block_index_map(const GroupPartition& p);

// {"modulus": n, "blocks": [[...], ...]} with blocks in canonical order.
std::string to_json(const GroupPartition& p);
GroupPartition partition_from_json(const std::string& text);

}  // namespace schur

#endif
