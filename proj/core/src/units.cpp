#include "schur/units.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "schur/numeric.hpp"

namespace schur {

namespace {

int mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<int>(a * b % m);
}

int multiplicative_order(std::int64_t a, std::int64_t m) {
  std::int64_t v = a % m;
  int order = 1;
  while (v != 1) {
    v = v * a % m;
    ++order;
  }
  return order;
}

std::vector<int> units_of(std::int64_t m) {
  std::vector<int> u;
  if (m == 1) {
    u.push_back(0);
    return u;
  }
  for (std::int64_t a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) u.push_back(static_cast<int>(a));
  return u;
}

// Closure of a generating set under multiplication mod m.
std::vector<int> generated_subgroup(std::int64_t m, std::vector<int> gens) {
  std::set<int> seen{1};
  std::vector<int> frontier{1};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int g : gens) {
        int w = mul_mod(v, g, m);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void check_prime_power(std::int64_t p, int k) {
  if (!is_prime(p)) throw std::domain_error("units_group: p must be prime");
  if (k < 0) throw std::domain_error("units_group: k must be >= 0");
}

}  // namespace

UnitsGroup units_group(std::int64_t p, int k) {
  check_prime_power(p, k);
  UnitsGroup g;
  g.p = p;
  g.k = k;
  g.modulus = ipow(p, k);
  g.elements = units_of(g.modulus);
  g.order = static_cast<std::int64_t>(g.elements.size());

  if (g.order == 1) {
    g.structure = UnitsStructure::trivial;
  } else if (p != 2 || k <= 2) {
    g.structure = UnitsStructure::cyclic;
    if (p == 2) {
      g.generators = {3};  // modulus 4
    } else {
      // Smallest primitive root, found by exhaustive order checking.
      for (int a : g.elements) {
        if (a != 1 && multiplicative_order(a, g.modulus) == g.order) {
          g.generators = {a};
          break;
        }
      }
    }
  } else {
    g.structure = UnitsStructure::klein_tower;
    g.generators = {static_cast<int>(g.modulus - 1), 5};  // -1 and 5
  }

  // The generators must actually generate.
  if (g.order > 1 &&
      generated_subgroup(g.modulus, g.generators).size() != static_cast<std::size_t>(g.order))
    throw std::logic_error("units_group: generators do not generate");
  return g;
}

std::vector<SubgroupOfUnits> all_subgroups(const UnitsGroup& g) {
  std::set<std::vector<int>> found;
  if (g.order == 1) {
    found.insert(g.elements);
  } else if (g.structure == UnitsStructure::cyclic) {
    const int root = g.generators[0];
    for (std::int64_t d = 1; d <= g.order; ++d) {
      if (g.order % d != 0) continue;
      // Unique subgroup of order d: generated by root^(order/d).
      std::int64_t step = g.order / d, v = 1;
      for (std::int64_t i = 0; i < step; ++i) v = v * root % g.modulus;
      found.insert(generated_subgroup(g.modulus, {static_cast<int>(v)}));
    }
  } else {
    for (std::size_t i = 0; i < g.elements.size(); ++i)
      for (std::size_t j = i; j < g.elements.size(); ++j)
        found.insert(generated_subgroup(g.modulus, {g.elements[i], g.elements[j]}));
  }
  std::vector<SubgroupOfUnits> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(SubgroupOfUnits{g.modulus, e});
  return out;
}

int layer_of(const SubgroupOfUnits& h) {
  if (h.modulus == 1) return 0;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= h.modulus; ++d)
    if (h.modulus % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = h.modulus;

  std::int64_t pk = 1;
  for (int k = 0;; ++k) {
    // h must contain the kernel {m : m = 1 mod p^k} of reduction to level k.
    bool contains_kernel = true;
    for (std::int64_t m = 1; m < h.modulus; ++m) {
      if (m % pk != 1 % pk) continue;
      if (std::gcd(m, h.modulus) != 1) continue;
      if (!std::binary_search(h.elements.begin(), h.elements.end(), static_cast<int>(m))) {
        contains_kernel = false;
        break;
      }
    }
    if (contains_kernel) return k;
    pk *= p;
  }
}

SubgroupOfUnits restrict_mod(const SubgroupOfUnits& h, std::int64_t d) {
  if (d < 1 || h.modulus % d != 0) throw std::domain_error("restrict_mod: d must divide the modulus");
  std::set<int> image;
  for (int m : h.elements) image.insert(static_cast<int>(m % d));
  return SubgroupOfUnits{d, {image.begin(), image.end()}};
}

SubgroupOfUnits preimage_mod(const UnitsGroup& g, const SubgroupOfUnits& h) {
  if (h.modulus < 1 || g.modulus % h.modulus != 0)
    throw std::domain_error("preimage_mod: incompatible moduli");
  std::vector<int> elems;
  for (int m : g.elements)
    if (std::binary_search(h.elements.begin(), h.elements.end(),
                           static_cast<int>(m % h.modulus)))
      elems.push_back(m);
  return SubgroupOfUnits{g.modulus, std::move(elems)};
}

std::map<int, int> layer_census(std::int64_t p, int n) {
  std::map<int, int> census;
  for (const auto& h : all_subgroups(units_group(p, n))) ++census[layer_of(h)];
  return census;
}

FieldKindTwo field_kind_two(const SubgroupOfUnits& h) {
  const int k = layer_of(h);
  if (k == 0) return FieldKindTwo::rationals;
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= 2;
  SubgroupOfUnits r = restrict_mod(h, pk);
  if (r.elements.size() == 1) return FieldKindTwo::cyclotomic;
  if (std::binary_search(r.elements.begin(), r.elements.end(), static_cast<int>(pk - 1)))
    return FieldKindTwo::real_plus;
  return FieldKindTwo::real_minus;
}

std::string lattice_json(std::int64_t p, int n) {
  auto subs = all_subgroups(units_group(p, n));
  // Deterministic order: by layer, then by residue set.
  std::sort(subs.begin(), subs.end(), [](const SubgroupOfUnits& a, const SubgroupOfUnits& b) {
    int la = layer_of(a), lb = layer_of(b);
    if (la != lb) return la < lb;
    return a.elements < b.elements;
  });

  auto contains = [](const SubgroupOfUnits& big, const SubgroupOfUnits& small) {
    return std::includes(big.elements.begin(), big.elements.end(), small.elements.begin(),
                         small.elements.end());
  };

  nlohmann::json j;
  j["modulus"] = ipow(p, n);
  j["subgroups"] = nlohmann::json::array();
  for (const auto& h : subs)
    j["subgroups"].push_back({{"elements", h.elements}, {"layer", layer_of(h)}});

  // Field i covered by field j: subgroup i strictly contains subgroup j with
  // no subgroup strictly between.
  j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t jj = 0; jj < subs.size(); ++jj) {
      if (i == jj || subs[i].elements.size() <= subs[jj].elements.size()) continue;
      if (!contains(subs[i], subs[jj])) continue;
      bool covered = true;
      for (std::size_t m = 0; m < subs.size() && covered; ++m) {
        if (m == i || m == jj) continue;
        if (subs[m].elements.size() > subs[jj].elements.size() &&
            subs[m].elements.size() < subs[i].elements.size() && contains(subs[i], subs[m]) &&
            contains(subs[m], subs[jj]))
          covered = false;
      }
      if (covered) j["edges"].push_back({i, jj});
    }
  }
  return j.dump();
}

}  // namespace schur
