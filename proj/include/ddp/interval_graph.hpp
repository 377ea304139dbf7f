#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "ddp/model.hpp"

namespace ddp {

// Conflict graph over a set of deliveries, keyed by delivery id.
struct ConflictGraph {
  std::vector<int> vertices;               // delivery ids, input order
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted
  std::size_t edge_count() const { return edges.size(); }
};

ConflictGraph build_graph(const std::vector<Delivery>& items);

struct Clique {
  int omega = 0;
  std::vector<int> witness;  // ids sharing a common time point, sorted
};

Clique max_clique(const std::vector<Delivery>& items);

struct Coloring {
  std::unordered_map<int, int> color;  // delivery id -> color, 1-based
  int color_count = 0;
  int of(int id) const { return color.at(id); }
  // Ids per color, each list in the order of `items`.
  std::vector<std::vector<int>> classes(const std::vector<Delivery>& items) const;
};

// Greedy by launch time (ties by id), smallest free color. Uses exactly omega colors.
Coloring color_min(const std::vector<Delivery>& items);

// Extends a proper partial coloring. Unseeded vertices are colored in non-increasing rendezvous
// order (ties by id) with the smallest color unused by colored neighbours.
// Throws std::invalid_argument if the seeds are improper or the budget is exceeded.
Coloring color_with_seeds(const std::vector<Delivery>& items, const std::unordered_map<int, int>& seeds,
                          int color_budget);

bool is_proper(const std::vector<Delivery>& items, const Coloring& c);

}  // namespace ddp
