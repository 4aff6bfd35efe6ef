#include "schur/schur_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace schur {

namespace {

GroupPartition canonical(const GroupPartition& p) { return make_partition(p.modulus, p.blocks); }

int mod_inverse(int a, int m) {
  int t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return t < 0 ? t + m : t;
}

}  // namespace

SchurCheck is_schur_ring(const GroupPartition& input) {
  const GroupPartition p = canonical(input);  // throws on malformed input
  const int n = p.modulus;
  const auto block_of = block_index_map(p);
  const int r = static_cast<int>(p.blocks.size());

  SchurCheck check;

  // (1) the identity is a singleton class
  if (p.blocks[static_cast<std::size_t>(block_of[0])].size() != 1) {
    check.condition = 1;
    check.block_i = block_of[0];
    check.detail = "identity block is not the singleton {0}";
    return check;
  }

  // (2) classes are closed under inversion
  for (int i = 0; i < r; ++i) {
    const auto& block = p.blocks[static_cast<std::size_t>(i)];
    const int j = block_of[static_cast<std::size_t>((n - block[0]) % n)];
    const auto& image = p.blocks[static_cast<std::size_t>(j)];
    for (int g : block) {
      const int neg = (n - g) % n;
      if (block_of[static_cast<std::size_t>(neg)] != j) {
        check.condition = 2;
        check.block_i = i;
        check.block_j = j;
        check.witness_g = g;
        std::ostringstream msg;
        msg << "block #" << i << " maps under negation into blocks #" << j << " and #"
            << block_of[static_cast<std::size_t>(neg)];
        check.detail = msg.str();
        return check;
      }
    }
    if (block.size() != image.size()) {
      check.condition = 2;
      check.block_i = i;
      check.block_j = j;
      check.witness_g = block[0];
      check.detail = "negated block has different size";
      return check;
    }
  }

  // (3) products of class sums are constant on classes
  std::vector<int> conv(static_cast<std::size_t>(n));
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      std::fill(conv.begin(), conv.end(), 0);
      for (int g : p.blocks[static_cast<std::size_t>(i)])
        for (int h : p.blocks[static_cast<std::size_t>(j)]) ++conv[static_cast<std::size_t>((g + h) % n)];
      for (int k = 0; k < r; ++k) {
        const auto& block = p.blocks[static_cast<std::size_t>(k)];
        const int expected = conv[static_cast<std::size_t>(block[0])];
        for (int g : block) {
          if (conv[static_cast<std::size_t>(g)] != expected) {
            check.condition = 3;
            check.block_i = i;
            check.block_j = j;
            check.block_k = k;
            check.witness_g = block[0];
            check.witness_g2 = g;
            std::ostringstream msg;
            msg << "product of blocks #" << i << " and #" << j << " takes values " << expected
                << " and " << conv[static_cast<std::size_t>(g)] << " on block #" << k;
            check.detail = msg.str();
            return check;
          }
        }
      }
    }
  }

  check.ok = true;
  return check;
}

SchurRing verify_ring(GroupPartition p) {
  GroupPartition canon = canonical(p);
  SchurCheck check = is_schur_ring(canon);
  if (!check.ok)
    throw std::invalid_argument("verify_ring: Wielandt condition " +
                                std::to_string(check.condition) + " fails: " + check.detail);
  return SchurRing{std::move(canon), true};
}

SchurRing trivial_ring(int n) {
  if (n < 1) throw std::domain_error("trivial_ring: n must be >= 1");
  std::vector<std::vector<int>> blocks{{0}};
  if (n > 1) {
    std::vector<int> rest(static_cast<std::size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 1);
    blocks.push_back(std::move(rest));
  }
  return verify_ring(make_partition(n, std::move(blocks)));
}

SchurRing group_ring(int n) {
  if (n < 1) throw std::domain_error("group_ring: n must be >= 1");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) blocks.push_back({g});
  return verify_ring(make_partition(n, std::move(blocks)));
}

SchurRing rational_ring(int n) {
  if (n < 1) throw std::domain_error("rational_ring: n must be >= 1");
  // Layers L_d: elements of order exactly d = n / gcd(n, g).
  std::map<int, std::vector<int>> layers;
  for (int g = 0; g < n; ++g) layers[n / std::gcd(n, g)].push_back(g);
  std::vector<std::vector<int>> blocks;
  for (auto& [d, members] : layers) blocks.push_back(std::move(members));
  return verify_ring(make_partition(n, std::move(blocks)));
}

SchurRing symmetric_ring(int n) {
  if (n < 1) throw std::domain_error("symmetric_ring: n must be >= 1");
  std::vector<std::vector<int>> blocks;
  for (int g = 0; g < n; ++g) {
    const int neg = (n - g) % n;
    if (g > neg) continue;
    blocks.push_back(g == neg ? std::vector<int>{g} : std::vector<int>{g, neg});
  }
  return verify_ring(make_partition(n, std::move(blocks)));
}

SchurRing orbit_ring(const SubgroupOfUnits& h) {
  const int n = static_cast<int>(h.modulus);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> blocks;
  for (int g = 0; g < n; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    std::set<int> orbit;
    for (int m : h.elements)
      orbit.insert(n == 1 ? 0 : static_cast<int>(static_cast<std::int64_t>(m) * g % n));
    std::vector<int> block(orbit.begin(), orbit.end());
    for (int v : block) seen[static_cast<std::size_t>(v)] = 1;
    blocks.push_back(std::move(block));
  }
  return verify_ring(make_partition(n, std::move(blocks)));
}

bool is_ring_subgroup(const GroupPartition& p, int d) {
  if (d < 1 || p.modulus % d != 0) return false;
  const int stride = p.modulus / d;
  const auto block_of = block_index_map(p);
  std::set<int> block_ids;
  for (int j = 0; j < d; ++j) block_ids.insert(block_of[static_cast<std::size_t>(j * stride)]);
  std::size_t total = 0;
  for (int b : block_ids) total += p.blocks[static_cast<std::size_t>(b)].size();
  return total == static_cast<std::size_t>(d);
}

std::optional<GroupPartition> try_restrict_to_subgroup(const GroupPartition& p, int h) {
  if (h < 1 || p.modulus % h != 0 || !is_ring_subgroup(p, h)) return std::nullopt;
  const int stride = p.modulus / h;
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks) {
    if (block[0] % stride != 0) continue;
    std::vector<int> relabeled;
    relabeled.reserve(block.size());
    for (int g : block) relabeled.push_back(g / stride);
    blocks.push_back(std::move(relabeled));
  }
  return make_partition(h, std::move(blocks));
}

std::optional<GroupPartition> try_project_quotient(const GroupPartition& p, int k) {
  if (k < 1 || p.modulus % k != 0) return std::nullopt;
  const int q = p.modulus / k;
  std::set<std::vector<int>> images;
  for (const auto& block : p.blocks) {
    std::set<int> image;
    for (int g : block) image.insert(g % q);
    images.insert(std::vector<int>(image.begin(), image.end()));
  }
  // The images must tile Z_q exactly; overlapping distinct images mean the
  // projection is not partition-defined.
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  for (const auto& image : images)
    for (int g : image) {
      if (seen[static_cast<std::size_t>(g)]) return std::nullopt;
      seen[static_cast<std::size_t>(g)] = 1;
    }
  return make_partition(q, {images.begin(), images.end()});
}

bool wedge_compatible(const GroupPartition& s, int k, const GroupPartition& t) {
  const int h = s.modulus;
  const std::int64_t n = static_cast<std::int64_t>(k) * t.modulus;
  if (k <= 1 || h % k != 0 || n % h != 0 || h >= n) return false;
  if (!is_ring_subgroup(s, k)) return false;
  auto projected = try_project_quotient(s, k);
  auto section = try_restrict_to_subgroup(t, h / k);
  return projected && section && *projected == *section;
}

GroupPartition wedge_blocks(const GroupPartition& s, int k, const GroupPartition& t) {
  const int h = s.modulus;
  const int q = t.modulus;
  const std::int64_t n64 = static_cast<std::int64_t>(k) * q;
  if (k <= 1 || h % k != 0 || n64 % h != 0 || h >= n64)
    throw std::invalid_argument("wedge_blocks: divisor chain 1 < k <= h < n violated");
  const int n = static_cast<int>(n64);
  const int embed = n / h;  // H = embed * Z_h inside Z_n; H/K = embed * Z_{h/k} inside Z_q

  std::vector<std::vector<int>> blocks;
  for (const auto& block : s.blocks) {
    std::vector<int> embedded;
    embedded.reserve(block.size());
    for (int g : block) embedded.push_back(g * embed);
    blocks.push_back(std::move(embedded));
  }
  for (const auto& block : t.blocks) {
    const bool inside_hk = std::all_of(block.begin(), block.end(),
                                       [&](int g) { return g % embed == 0; });
    if (inside_hk) continue;  // covered by the embedded copy of s
    std::vector<int> lifted;
    lifted.reserve(block.size() * static_cast<std::size_t>(k));
    for (int g : block)
      for (int j = 0; j < k; ++j) lifted.push_back(g + j * q);
    blocks.push_back(std::move(lifted));
  }
  return make_partition(n, std::move(blocks));
}

SchurRing wedge_product(const SchurRing& s, int k, const SchurRing& t) {
  if (!wedge_compatible(s.partition, k, t.partition))
    throw std::invalid_argument("wedge_product: incompatible factors");
  return verify_ring(wedge_blocks(s.partition, k, t.partition));
}

SchurRing wreath_product(const SchurRing& s, const SchurRing& t) {
  return wedge_product(s, s.partition.modulus, t);
}

SchurRing dot_product(const SchurRing& s, const SchurRing& t) {
  const int a = s.partition.modulus;
  const int b = t.partition.modulus;
  if (std::gcd(a, b) != 1) throw std::invalid_argument("dot_product: moduli must be coprime");
  if (a == 1) {
    SchurRing copy = t;
    return copy;
  }
  if (b == 1) {
    SchurRing copy = s;
    return copy;
  }
  const std::int64_t n = static_cast<std::int64_t>(a) * b;
  // CRT: m = x * b * (b^{-1} mod a) + y * a * (a^{-1} mod b)
  const std::int64_t ua = static_cast<std::int64_t>(b) * mod_inverse(b % a, a);
  const std::int64_t ub = static_cast<std::int64_t>(a) * mod_inverse(a % b, b);
  std::vector<std::vector<int>> blocks;
  for (const auto& cb : s.partition.blocks) {
    for (const auto& db : t.partition.blocks) {
      std::vector<int> block;
      block.reserve(cb.size() * db.size());
      for (int x : cb)
        for (int y : db) block.push_back(static_cast<int>((x * ua + y * ub) % n));
      blocks.push_back(std::move(block));
    }
  }
  return verify_ring(make_partition(static_cast<int>(n), std::move(blocks)));
}

SchurRing intersect_rings(const SchurRing& s, const SchurRing& t) {
  const int n = s.partition.modulus;
  if (n != t.partition.modulus) throw std::invalid_argument("intersect_rings: modulus mismatch");
  // Union-find: merge within blocks of both partitions; components are the
  // classes of the finest common coarsening.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (const auto* part : {&s.partition, &t.partition})
    for (const auto& block : part->blocks)
      for (std::size_t i = 1; i < block.size(); ++i) unite(block[0], block[i]);
  std::map<int, std::vector<int>> groups;
  for (int g = 0; g < n; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return verify_ring(make_partition(n, std::move(blocks)));
}

}  // namespace schur
