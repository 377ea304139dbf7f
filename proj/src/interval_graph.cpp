#include "ddp/interval_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace ddp {

namespace {

std::vector<const Delivery*> by_launch(const std::vector<Delivery>& items) {
  std::vector<const Delivery*> order;
  order.reserve(items.size());
  for (const Delivery& d : items) order.push_back(&d);
  std::sort(order.begin(), order.end(), [](const Delivery* a, const Delivery* b) {
    if (a->span.lo != b->span.lo) return a->span.lo < b->span.lo;
    return a->id < b->id;
  });
  return order;
}

}  // namespace

ConflictGraph build_graph(const std::vector<Delivery>& items) {
  ConflictGraph g;
  for (const Delivery& d : items) g.vertices.push_back(d.id);
  std::set<std::pair<Time, int>> active;  // (rendezvous, id)
  for (const Delivery* d : by_launch(items)) {
    while (!active.empty() && active.begin()->first < d->span.lo) active.erase(active.begin());
    for (const auto& [hi, id] : active) g.edges.emplace_back(std::min(id, d->id), std::max(id, d->id));
    active.emplace(d->span.hi, d->id);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Clique max_clique(const std::vector<Delivery>& items) {
  Clique best;
  std::set<std::pair<Time, int>> active;
  for (const Delivery* d : by_launch(items)) {
    while (!active.empty() && active.begin()->first < d->span.lo) active.erase(active.begin());
    active.emplace(d->span.hi, d->id);
    if (static_cast<int>(active.size()) > best.omega) {
      best.omega = static_cast<int>(active.size());
      best.witness.clear();
      for (const auto& entry : active) best.witness.push_back(entry.second);
    }
  }
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

std::vector<std::vector<int>> Coloring::classes(const std::vector<Delivery>& items) const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(color_count));
  for (const Delivery& d : items) out[static_cast<std::size_t>(of(d.id) - 1)].push_back(d.id);
  return out;
}

Coloring color_min(const std::vector<Delivery>& items) {
  Coloring c;
  std::set<std::pair<Time, int>> active;  // (rendezvous, color)
  std::priority_queue<int, std::vector<int>, std::greater<>> free_colors;
  for (const Delivery* d : by_launch(items)) {
    while (!active.empty() && active.begin()->first < d->span.lo) {
      free_colors.push(active.begin()->second);
      active.erase(active.begin());
    }
    int col;
    if (free_colors.empty()) {
      col = ++c.color_count;
    } else {
      col = free_colors.top();
      free_colors.pop();
    }
    c.color[d->id] = col;
    active.emplace(d->span.hi, col);
  }
  return c;
}

Coloring color_with_seeds(const std::vector<Delivery>& items, const std::unordered_map<int, int>& seeds,
                          int color_budget) {
  std::unordered_map<int, std::vector<int>> adj;
  for (const auto& [u, v] : build_graph(items).edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Coloring c;
  for (const Delivery& d : items) {
    auto it = seeds.find(d.id);
    if (it == seeds.end()) continue;
    if (it->second < 1) throw std::invalid_argument("color_with_seeds: colors are 1-based");
    c.color[d.id] = it->second;
    c.color_count = std::max(c.color_count, it->second);
  }
  for (const auto& [id, col] : c.color) {
    for (int nb : adj[id]) {
      auto it = c.color.find(nb);
      if (it != c.color.end() && it->second == col)
        throw std::invalid_argument("color_with_seeds: seeds are not a proper coloring");
    }
  }

  std::vector<const Delivery*> rest;
  for (const Delivery& d : items)
    if (!c.color.count(d.id)) rest.push_back(&d);
  std::sort(rest.begin(), rest.end(), [](const Delivery* a, const Delivery* b) {
    if (a->span.hi != b->span.hi) return a->span.hi > b->span.hi;
    return a->id < b->id;
  });
  for (const Delivery* d : rest) {
    std::vector<int> used;
    for (int nb : adj[d->id]) {
      auto it = c.color.find(nb);
      if (it != c.color.end()) used.push_back(it->second);
    }
    std::sort(used.begin(), used.end());
    int col = 1;
    for (int u : used) {
      if (u == col)
        ++col;
      else if (u > col)
        break;
    }
    c.color[d->id] = col;
    c.color_count = std::max(c.color_count, col);
  }
  if (c.color_count > color_budget)
    throw std::invalid_argument("color_with_seeds: needs " + std::to_string(c.color_count) + " colors, budget " +
                                std::to_string(color_budget));
  return c;
}

bool is_proper(const std::vector<Delivery>& items, const Coloring& c) {
  for (const auto& [u, v] : build_graph(items).edges)
    if (c.of(u) == c.of(v)) return false;
  return true;
}

}  // namespace ddp
