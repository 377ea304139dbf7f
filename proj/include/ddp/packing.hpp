#pragma once

#include <utility>
#include <vector>

#include "ddp/model.hpp"

namespace ddp {

struct Block {
  std::vector<int> ids;  // in insertion order
  Cost total = 0;
};

struct Partition {
  std::vector<Block> blocks;
  int m() const { return static_cast<int>(blocks.size()); }
  // Index of the block holding `id`, or -1.
  int block_of(int id) const;
};

enum class FitRule {
  BestFit,       // feasible block with least remaining capacity, ties by lowest index
  DescendRight,  // first feasible node met by a root-to-right walk over a balanced key order
};

// Places items in the given order. Items are assumed pairwise compatible.
// Throws std::invalid_argument if any cost exceeds the budget.
Partition greedy_pack(const std::vector<Delivery>& items, Cost budget, FitRule rule = FitRule::BestFit);

// Forced pairs are placed first, each pair opening its own block; the rest follow greedy_pack.
// Throws std::invalid_argument if a pair exceeds the budget, conflicts, or names an unknown id.
Partition greedy_pack_seeded(const std::vector<Delivery>& items, const std::vector<std::pair<int, int>>& forced,
                             Cost budget, FitRule rule = FitRule::BestFit);

// First-fit decreasing: cost descending, then launch ascending, then id.
Partition ffd(const std::vector<Delivery>& items, Cost budget);

}  // namespace ddp
