#ifndef SCHUR_ENUMERATE_HPP
#define SCHUR_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/partition.hpp"
#include "schur/units.hpp"

namespace schur {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How a ring was produced by the constructive generator. A single canonical
// ring may have several origins; all are recorded.
struct RingProvenance {
  bool orbit = false;
  bool trivial = false;
  bool wedge = false;
};

struct EnumerationResult {
  enum class Method { constructive, brute_force };

  std::int64_t modulus = 1;
  Method method = Method::constructive;
  std::vector<GroupPartition> rings;       // canonical, sorted, axiom-checked
  std::vector<SubgroupOfUnits> images;     // omega image per ring
  std::vector<RingProvenance> provenance;  // constructive runs only
};

struct EnumerationOptions {
  std::int64_t max_modulus = 1024;        // constructive desk-scale bound
  long long brute_budget = 100'000'000;   // partial-state cap for brute force
};

// Recursive Leung-Man generator with per-modulus memoization: orbit rings,
// the trivial ring, and every compatible wedge s ^_k t with s over Z_{p^b},
// t over Z_{p^{n-a}}, 1 <= a <= b < n. Every output is axiom-checked.
class Enumerator {
 public:
  explicit Enumerator(EnumerationOptions options = {}) : options_(options) {}

  const EnumerationResult& constructive(std::int64_t p, int n);

 private:
  EnumerationOptions options_;
  std::map<std::int64_t, EnumerationResult> cache_;
};

EnumerationResult enumerate_constructive(std::int64_t p, int n,
                                         const EnumerationOptions& options = {});

// Independent oracle: exhaustive search over partitions of {1,...,n-1} (0 is
// always a singleton) in restricted-growth order, pruned by consistency of
// the block pairing induced by g <-> n-g, then filtered by the full axiom
// check. Throws BudgetExceeded when the partial-state budget runs out.
// jobs > 1 shards the search tree across threads; the result is identical.
EnumerationResult enumerate_bruteforce(int modulus, long long budget = 100'000'000,
                                       int jobs = 1);

struct SubfieldTally {
  std::vector<std::pair<SubgroupOfUnits, int>> by_subgroup;  // sorted by (layer, elements)
  std::map<int, int> by_layer;
};

SubfieldTally tally_by_subfield(const EnumerationResult& result);

struct CrosscheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CrosscheckReport {
  std::int64_t p = 0;
  int n = 0;
  bool ok = false;
  std::vector<CrosscheckLine> lines;
};

// Binds counting to enumeration: total count vs the recurrence value, the
// per-field tallies vs Omega(n,k) / Omega_s(n,k), and (optionally) set
// equality against the brute-force oracle.
CrosscheckReport crosscheck(std::int64_t p, int n, bool with_bruteforce = false,
                            const EnumerationOptions& options = {});

// JSON array of {"modulus", "blocks", "omega_image"}, in canonical ring order.
std::string dump_json(const EnumerationResult& result);

}  // namespace schur

#endif
