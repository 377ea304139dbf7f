#include "ddp/packing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ddp {

int Partition::block_of(int id) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].ids.begin(), blocks[b].ids.end(), id) != blocks[b].ids.end()) return static_cast<int>(b);
  return -1;
}

namespace {

// Blocks keyed by remaining capacity. Best-fit is a successor query on (remaining, index).
class BlockTree {
 public:
  BlockTree(Cost budget, FitRule rule) : budget_(budget), rule_(rule) {}

  void place(const Delivery& d, Partition& p) {
    if (d.cost > budget_ || d.cost <= 0)
      throw std::invalid_argument("packing: cost of delivery " + std::to_string(d.id) + " outside (0, budget]");
    const int target = find(d.cost);
    if (target < 0) {
      open(p, d);
      return;
    }
    Block& b = p.blocks[static_cast<std::size_t>(target)];
    erase(budget_ - b.total, target);
    b.ids.push_back(d.id);
    b.total += d.cost;
    insert(budget_ - b.total, target);
  }

  void open(Partition& p, const Delivery& d) {
    p.blocks.push_back({{d.id}, d.cost});
    insert(budget_ - d.cost, p.m() - 1);
  }

  void add_to(Partition& p, int block, const Delivery& d) {
    Block& b = p.blocks[static_cast<std::size_t>(block)];
    erase(budget_ - b.total, block);
    b.ids.push_back(d.id);
    b.total += d.cost;
    insert(budget_ - b.total, block);
  }

 private:
  using Key = std::pair<Cost, int>;

  int find(Cost cost) const {
    if (rule_ == FitRule::BestFit) {
      auto it = keys_.lower_bound({cost, -1});
      return it == keys_.end() ? -1 : it->second;
    }
    // Walk a balanced tree laid over the sorted keys: stop at the first node that fits,
    // otherwise continue into the right subtree.
    std::size_t lo = 0;
    std::size_t hi = sorted_.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (sorted_[mid].first >= cost) return sorted_[mid].second;
      lo = mid + 1;
    }
    return -1;
  }

  void insert(Cost rem, int idx) {
    if (rule_ == FitRule::BestFit) {
      keys_.insert({rem, idx});
    } else {
      const Key k{rem, idx};
      sorted_.insert(std::lower_bound(sorted_.begin(), sorted_.end(), k), k);
    }
  }

  void erase(Cost rem, int idx) {
    if (rule_ == FitRule::BestFit) {
      keys_.erase({rem, idx});
    } else {
      const Key k{rem, idx};
      sorted_.erase(std::lower_bound(sorted_.begin(), sorted_.end(), k));
    }
  }

  Cost budget_;
  FitRule rule_;
  std::set<Key> keys_;
  std::vector<Key> sorted_;
};

}  // namespace

Partition greedy_pack(const std::vector<Delivery>& items, Cost budget, FitRule rule) {
  Partition p;
  BlockTree tree(budget, rule);
  for (const Delivery& d : items) tree.place(d, p);
  return p;
}

Partition greedy_pack_seeded(const std::vector<Delivery>& items, const std::vector<std::pair<int, int>>& forced,
                             Cost budget, FitRule rule) {
  std::unordered_map<int, const Delivery*> by_id;
  for (const Delivery& d : items) by_id[d.id] = &d;
  Partition p;
  BlockTree tree(budget, rule);
  std::unordered_map<int, bool> done;
  for (const auto& [a, b] : forced) {
    auto ia = by_id.find(a);
    auto ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end() || a == b || done.count(a) || done.count(b))
      throw std::invalid_argument("greedy_pack_seeded: bad forced pair");
    const Delivery& da = *ia->second;
    const Delivery& db = *ib->second;
    if (da.cost + db.cost > budget || conflicts(da.span, db.span) || da.cost <= 0 || db.cost <= 0)
      throw std::invalid_argument("greedy_pack_seeded: infeasible forced pair");
    tree.open(p, da);
    tree.add_to(p, p.m() - 1, db);
    done[a] = done[b] = true;
  }
  for (const Delivery& d : items)
    if (!done.count(d.id)) tree.place(d, p);
  return p;
}

Partition ffd(const std::vector<Delivery>& items, Cost budget) {
  std::vector<const Delivery*> order;
  for (const Delivery& d : items) {
    if (d.cost > budget || d.cost <= 0)
      throw std::invalid_argument("ffd: cost of delivery " + std::to_string(d.id) + " outside (0, budget]");
    order.push_back(&d);
  }
  std::sort(order.begin(), order.end(), [](const Delivery* a, const Delivery* b) {
    if (a->cost != b->cost) return a->cost > b->cost;
    if (a->span.lo != b->span.lo) return a->span.lo < b->span.lo;
    return a->id < b->id;
  });
  Partition p;
  for (const Delivery* d : order) {
    bool placed = false;
    for (Block& b : p.blocks) {
      if (b.total + d->cost <= budget) {
        b.ids.push_back(d->id);
        b.total += d->cost;
        placed = true;
        break;
      }
    }
    if (!placed) p.blocks.push_back({{d->id}, d->cost});
  }
  return p;
}

}  // namespace ddp
