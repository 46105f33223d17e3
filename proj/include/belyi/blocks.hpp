#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "belyi/dessin.hpp"

namespace belyi {

// A nontrivial partition of the edges into equal blocks, 0-based. Each block is
// sorted and blocks are ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  const std::vector<int>& block_of(int x) const;
};

// Smallest block system with a and b in one block; nullopt when that is the
// whole edge set. Throws DessinError if a == b or the dessin is disconnected.
std::optional<BlockSystem> minimal_blocks(const Dessin& d, int a, int b);

// Each generator maps every block onto a block.
bool is_block_system(const Dessin& d, const BlockSystem& s);

struct PrimitivityReport {
  bool primitive = true;
  int witness_point = -1;  // smallest x whose seed {0, x} gives a nontrivial system
  std::optional<BlockSystem> witness;
};

PrimitivityReport is_primitive(const Dessin& d);
// Same scan without threads; the reference for tests and the benchmark.
PrimitivityReport is_primitive_serial(const Dessin& d);

struct QuotientTriple {
  Perm sigma0, sigma1, sigma_inf;
};

// Action on blocks; block i is the i-th block of s.
QuotientTriple quotient_triple(const Dessin& d, const BlockSystem& s);

nlohmann::json certificate_json(const Dessin& d, const PrimitivityReport& r);

}  // namespace belyi
