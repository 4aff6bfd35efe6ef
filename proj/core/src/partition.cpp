#include "schur/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace schur {

GroupPartition make_partition(int modulus, std::vector<std::vector<int>> blocks) {
  if (modulus < 1) throw std::invalid_argument("GroupPartition: modulus must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("GroupPartition: empty block");
    std::sort(block.begin(), block.end());
    for (int g : block) {
      if (g < 0 || g >= modulus) throw std::invalid_argument("GroupPartition: residue out of range");
      if (seen[static_cast<std::size_t>(g)])
        throw std::invalid_argument("GroupPartition: blocks are not disjoint");
      seen[static_cast<std::size_t>(g)] = 1;
      ++covered;
    }
  }
  if (covered != modulus) throw std::invalid_argument("GroupPartition: blocks do not cover Z_n");
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return GroupPartition{modulus, std::move(blocks)};
}

std::vector<int> block_index_map(const GroupPartition& p) {
  std::vector<int> idx(static_cast<std::size_t>(p.modulus), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int g : p.blocks[b]) idx[static_cast<std::size_t>(g)] = static_cast<int>(b);
  return idx;
}

std::string to_json(const GroupPartition& p) {
  nlohmann::json j;
  j["modulus"] = p.modulus;
  j["blocks"] = p.blocks;
  return j.dump();
}

GroupPartition partition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("partition_from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("modulus") || !j.contains("blocks"))
    throw std::invalid_argument("partition_from_json: expected {modulus, blocks}");
  int modulus;
  std::vector<std::vector<int>> blocks;
  try {
    modulus = j["modulus"].get<int>();
    blocks = j["blocks"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("partition_from_json: ") + e.what());
  }
  return make_partition(modulus, std::move(blocks));
}

}  // namespace schur
