#include "schur/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "schur/counting.hpp"
#include "schur/numeric.hpp"
#include "schur/omega_map.hpp"
#include "schur/schur_ring.hpp"

namespace schur {

namespace {

void finalize(EnumerationResult& result) {
  std::sort(result.rings.begin(), result.rings.end());
  result.images.clear();
  result.images.reserve(result.rings.size());
  for (const auto& ring : result.rings) {
    SchurCheck check = is_schur_ring(ring);
    if (!check.ok)
      throw std::logic_error("enumeration soundness: generated partition fails condition " +
                             std::to_string(check.condition) + ": " + check.detail);
    result.images.push_back(omega_image(ring));
  }
}

}  // namespace

const EnumerationResult& Enumerator::constructive(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::domain_error("enumerate_constructive: p must be prime");
  if (n < 0) throw std::domain_error("enumerate_constructive: n must be >= 0");
  const std::int64_t modulus = ipow(p, n);
  if (modulus > options_.max_modulus)
    throw BudgetExceeded("enumerate_constructive: modulus " + std::to_string(modulus) +
                         " exceeds bound " + std::to_string(options_.max_modulus));
  if (auto it = cache_.find(modulus); it != cache_.end()) return it->second;

  EnumerationResult result;
  result.modulus = modulus;
  result.method = EnumerationResult::Method::constructive;

  std::map<GroupPartition, RingProvenance> found;
  if (n == 0) {
    auto& provenance = found[make_partition(1, {{0}})];
    provenance.trivial = provenance.orbit = true;
  } else {
    found[trivial_ring(static_cast<int>(modulus)).partition].trivial = true;
    for (const auto& h : all_subgroups(units_group(p, n)))
      found[orbit_ring(h).partition].orbit = true;
    for (int a = 1; a < n; ++a) {
      const int k = static_cast<int>(ipow(p, a));
      const EnumerationResult& quotient = constructive(p, n - a);
      for (int b = a; b < n; ++b) {
        const EnumerationResult& nucleus = constructive(p, b);
        for (const auto& s : nucleus.rings)
          for (const auto& t : quotient.rings)
            if (wedge_compatible(s, k, t)) found[wedge_blocks(s, k, t)].wedge = true;
      }
    }
  }

  result.rings.reserve(found.size());
  result.provenance.reserve(found.size());
  for (auto& [ring, provenance] : found) {
    result.rings.push_back(ring);
    result.provenance.push_back(provenance);
  }
  finalize(result);  // map order is already canonical; finalize re-sorts harmlessly
  return cache_.emplace(modulus, std::move(result)).first->second;
}

EnumerationResult enumerate_constructive(std::int64_t p, int n, const EnumerationOptions& options) {
  Enumerator enumerator(options);
  return enumerator.constructive(p, n);
}

namespace {

// Depth-first search over restricted-growth assignments of 1..n-1 to blocks.
// Elements are visited in the interleaved order 1, n-1, 2, n-2, ... so the
// pairing constraint sigma(block(g)) = block(n-g) binds as early as possible.
class BruteForceSearch {
 public:
  struct Prefix {
    std::vector<int> choices;  // block ids in visit order
    int used_blocks = 0;
  };

  BruteForceSearch(int n, long long budget, std::atomic<long long>* nodes)
      : n_(n), budget_(budget), nodes_(nodes) {
    for (int g = 1, h = n - 1; g <= h; ++g, --h) {
      order_.push_back(g);
      if (h != g) order_.push_back(h);
    }
    assignment_.assign(static_cast<std::size_t>(n), -1);
    pair_block_.assign(static_cast<std::size_t>(n), -1);
  }

  std::size_t depth_total() const { return order_.size(); }

  std::vector<GroupPartition> run() {
    descend(0, 0, order_.size(), nullptr);
    return std::move(survivors_);
  }

  // Feasible shard roots at the given depth, in deterministic DFS order.
  std::vector<Prefix> collect_prefixes(std::size_t depth) {
    std::vector<Prefix> prefixes;
    descend(0, 0, depth, &prefixes);
    return prefixes;
  }

  // Continue the search below a previously collected prefix.
  std::vector<GroupPartition> run_from(const Prefix& prefix) {
    replay(prefix);
    descend(prefix.choices.size(), prefix.used_blocks, order_.size(), nullptr);
    return std::move(survivors_);
  }

 private:
  // Applies the pairing constraint for assigning element g to block b.
  // Returns false when inconsistent; records reversals in set_at/set_at2.
  bool apply_constraint(int g, int b, int& set_at, int& set_at2) {
    set_at = set_at2 = -1;
    const int partner = n_ - g;
    const int partner_block = assignment_[static_cast<std::size_t>(partner)];
    if (partner == g) {
      if (pair_block_[static_cast<std::size_t>(b)] == -1) {
        pair_block_[static_cast<std::size_t>(b)] = b;
        set_at = b;
        return true;
      }
      return pair_block_[static_cast<std::size_t>(b)] == b;
    }
    if (partner_block == -1) return true;
    const int c = partner_block;
    if (pair_block_[static_cast<std::size_t>(b)] == -1 &&
        (pair_block_[static_cast<std::size_t>(c)] == -1 ||
         pair_block_[static_cast<std::size_t>(c)] == b)) {
      pair_block_[static_cast<std::size_t>(b)] = c;
      set_at = b;
      if (pair_block_[static_cast<std::size_t>(c)] == -1) {
        pair_block_[static_cast<std::size_t>(c)] = b;
        set_at2 = c;
      }
      return true;
    }
    return pair_block_[static_cast<std::size_t>(b)] == c &&
           pair_block_[static_cast<std::size_t>(c)] == b;
  }

  void descend(std::size_t depth, int used_blocks, std::size_t stop_depth,
               std::vector<Prefix>* sink) {
    if (depth == stop_depth) {
      if (sink) {
        Prefix p;
        p.used_blocks = used_blocks;
        for (std::size_t d = 0; d < depth; ++d)
          p.choices.push_back(assignment_[static_cast<std::size_t>(order_[d])]);
        sink->push_back(std::move(p));
      } else {
        emit();
      }
      return;
    }
    if (nodes_->fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("enumerate_bruteforce: partial-state budget exhausted");
    const int g = order_[depth];
    for (int b = 0; b <= used_blocks && b < static_cast<int>(order_.size()); ++b) {
      assignment_[static_cast<std::size_t>(g)] = b;
      int set_at, set_at2;
      if (apply_constraint(g, b, set_at, set_at2))
        descend(depth + 1, std::max(used_blocks, b + 1), stop_depth, sink);
      if (set_at != -1) pair_block_[static_cast<std::size_t>(set_at)] = -1;
      if (set_at2 != -1) pair_block_[static_cast<std::size_t>(set_at2)] = -1;
      assignment_[static_cast<std::size_t>(g)] = -1;
    }
  }

  void replay(const Prefix& prefix) {
    for (std::size_t d = 0; d < prefix.choices.size(); ++d) {
      const int g = order_[d];
      const int b = prefix.choices[d];
      assignment_[static_cast<std::size_t>(g)] = b;
      int set_at, set_at2;
      if (!apply_constraint(g, b, set_at, set_at2))
        throw std::logic_error("enumerate_bruteforce: infeasible prefix replay");
    }
  }

  void emit() {
    std::vector<std::vector<int>> blocks{{0}};
    std::map<int, std::vector<int>> by_block;
    for (int g = 1; g < n_; ++g) by_block[assignment_[static_cast<std::size_t>(g)]].push_back(g);
    for (auto& [b, members] : by_block) blocks.push_back(std::move(members));
    GroupPartition candidate = make_partition(n_, std::move(blocks));
    if (is_schur_ring(candidate).ok) survivors_.push_back(std::move(candidate));
  }

  int n_;
  long long budget_;
  std::atomic<long long>* nodes_;
  std::vector<int> order_;
  std::vector<int> assignment_;
  std::vector<int> pair_block_;  // block -> block image under negation
  std::vector<GroupPartition> survivors_;
};

}  // namespace

EnumerationResult enumerate_bruteforce(int modulus, long long budget, int jobs) {
  if (modulus < 1) throw std::domain_error("enumerate_bruteforce: modulus must be >= 1");
  if (!factor_prime_power(modulus))
    throw std::domain_error("enumerate_bruteforce: modulus must be a prime power");
  EnumerationResult result;
  result.modulus = modulus;
  result.method = EnumerationResult::Method::brute_force;
  std::atomic<long long> nodes{0};
  if (modulus == 1) {
    result.rings.push_back(make_partition(1, {{0}}));
  } else if (jobs <= 1) {
    BruteForceSearch search(modulus, budget, &nodes);
    result.rings = search.run();
  } else {
    // Shard the DFS on a shallow prefix; survivors merge deterministically
    // because finalize() sorts canonically.
    BruteForceSearch root(modulus, budget, &nodes);
    const std::size_t shard_depth = std::min<std::size_t>(5, root.depth_total());
    const auto prefixes = root.collect_prefixes(shard_depth);
    std::vector<std::vector<GroupPartition>> shard_out(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::mutex error_mutex;
    std::exception_ptr error;
    const int worker_count = std::min<int>(jobs, static_cast<int>(prefixes.size()));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            BruteForceSearch shard(modulus, budget, &nodes);
            shard_out[i] = shard.run_from(prefixes[i]);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);
    for (auto& shard : shard_out)
      for (auto& ring : shard) result.rings.push_back(std::move(ring));
  }
  result.provenance.assign(result.rings.size(), RingProvenance{});
  finalize(result);
  return result;
}

SubfieldTally tally_by_subfield(const EnumerationResult& result) {
  std::map<SubgroupOfUnits, int> counts;
  for (const auto& image : result.images) ++counts[image];
  SubfieldTally tally;
  tally.by_subgroup.assign(counts.begin(), counts.end());
  std::sort(tally.by_subgroup.begin(), tally.by_subgroup.end(),
            [](const auto& a, const auto& b) {
              const int la = layer_of(a.first), lb = layer_of(b.first);
              if (la != lb) return la < lb;
              return a.first.elements < b.first.elements;
            });
  for (const auto& [subgroup, count] : tally.by_subgroup) tally.by_layer[layer_of(subgroup)] += count;
  return tally;
}

CrosscheckReport crosscheck(std::int64_t p, int n, bool with_bruteforce,
                            const EnumerationOptions& options) {
  CrosscheckReport report;
  report.p = p;
  report.n = n;

  const EnumerationResult result = enumerate_constructive(p, n, options);

  const BigInt expected_total =
      p == 2 ? omega_two(n) : omega_odd_eval(PrimeSpec::make(p, n));
  {
    CrosscheckLine line;
    line.name = "count";
    line.ok = BigInt(result.rings.size()) == expected_total;
    std::ostringstream msg;
    msg << "enumerated " << result.rings.size() << ", recurrence " << expected_total;
    line.detail = msg.str();
    report.lines.push_back(std::move(line));
  }

  const SubfieldTally tally = tally_by_subfield(result);
  auto tally_of = [&](const SubgroupOfUnits& h) {
    for (const auto& [subgroup, count] : tally.by_subgroup)
      if (subgroup == h) return count;
    return 0;
  };
  for (const auto& h : all_subgroups(units_group(p, n))) {
    const int k = layer_of(h);
    BigInt expected;
    if (p == 2) {
      if (k >= 3 && field_kind_two(h) != FieldKindTwo::cyclotomic)
        expected = omega_two_s(n, k);
      else
        expected = omega_two_layer(n, k);
    } else {
      expected = omega_layer_odd(n, k).eval(BigInt(divisor_count(p - 1)));
    }
    CrosscheckLine line;
    std::ostringstream name;
    name << "field layer " << k << " H={";
    for (std::size_t i = 0; i < h.elements.size() && i < 4; ++i)
      name << (i ? "," : "") << h.elements[i];
    if (h.elements.size() > 4) name << ",...";
    name << "}";
    line.name = name.str();
    const int actual = tally_of(h);
    line.ok = BigInt(actual) == expected;
    std::ostringstream msg;
    msg << "tally " << actual << ", formula " << expected;
    line.detail = msg.str();
    report.lines.push_back(std::move(line));
  }

  if (with_bruteforce) {
    EnumerationResult brute = enumerate_bruteforce(static_cast<int>(result.modulus),
                                                   options.brute_budget);
    CrosscheckLine line;
    line.name = "brute-force agreement";
    line.ok = brute.rings == result.rings;
    std::ostringstream msg;
    msg << "brute-force " << brute.rings.size() << ", constructive " << result.rings.size();
    line.detail = msg.str();
    report.lines.push_back(std::move(line));
  }

  report.ok = std::all_of(report.lines.begin(), report.lines.end(),
                          [](const CrosscheckLine& line) { return line.ok; });
  return report;
}

std::string dump_json(const EnumerationResult& result) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < result.rings.size(); ++i) {
    nlohmann::json entry;
    entry["modulus"] = result.rings[i].modulus;
    entry["blocks"] = result.rings[i].blocks;
    entry["omega_image"] = result.images[i].elements;
    j.push_back(std::move(entry));
  }
  return j.dump();
}

}  // namespace schur
