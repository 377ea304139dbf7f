#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "ddp/model.hpp"
#include "ddp/packing.hpp"

namespace support {

using namespace ddp;

// splitmix64: small, portable, good enough for fuzzing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

struct Shape {
  int n = 6;
  int budget = 10;
  int r = 0;
  int horizon = 40;
  int max_len = 8;
  StationMode mode = StationMode::Swap;
  bool conflict_free = false;
};

inline bool station_ok(const Interval& d, const std::vector<Station>& stations) {
  int touched = 0;
  for (const Station& s : stations) {
    if (s.span.lo <= d.lo && d.hi <= s.span.hi) return false;
    if (conflicts(d, s.span)) ++touched;
  }
  return touched <= 1;
}

// Random valid instance in model units (no scaling): stations of length 3 spread over the horizon.
inline Instance random_instance(Rng& rng, const Shape& shape) {
  Instance inst;
  inst.budget = shape.budget;
  for (int l = 1; l <= shape.r; ++l) {
    const std::int64_t centre = shape.horizon * (2 * l - 1) / (2 * shape.r);
    const std::int64_t lo = centre - 1 + rng.range(-1, 1);
    Station st{l, {lo, lo + 3}, shape.mode, {}};
    if (shape.mode == StationMode::Charge && rng.coin()) st.rate = Rational(shape.budget, 2);
    inst.stations.push_back(st);
  }
  std::int64_t cursor = 0;
  while (inst.n() < shape.n) {
    Interval span;
    if (shape.conflict_free) {
      const std::int64_t lo = cursor + rng.range(0, 3);
      span = {lo, lo + rng.range(1, shape.max_len)};
    } else {
      const std::int64_t lo = rng.range(0, shape.horizon - 1);
      span = {lo, lo + rng.range(1, shape.max_len)};
    }
    if (!station_ok(span, inst.stations)) {
      if (shape.conflict_free) cursor += 1;
      continue;
    }
    if (shape.conflict_free) cursor = span.hi + 1;
    inst.deliveries.push_back({inst.n() + 1, span, rng.range(1, shape.budget)});
  }
  return inst;
}

// Pairwise compatible deliveries with random costs in [1, max_cost].
inline std::vector<Delivery> random_compatible(Rng& rng, int n, Cost max_cost) {
  std::vector<Delivery> out;
  Time t = 0;
  for (int i = 1; i <= n; ++i) {
    const Time lo = t + rng.range(0, 2);
    out.push_back({i, {lo, lo + rng.range(1, 3)}, rng.range(1, max_cost)});
    t = out.back().span.hi + 1;
  }
  return out;
}

// Maximum number of intervals sharing a point, by checking every endpoint.
inline int brute_clique(const std::vector<Delivery>& items) {
  int best = 0;
  for (const Delivery& a : items)
    for (Time t : {a.span.lo, a.span.hi}) {
      int c = 0;
      for (const Delivery& b : items) c += b.span.contains(t);
      best = std::max(best, c);
    }
  return best;
}

// Minimum number of bins by subset dynamic programming (n <= ~14). Returns the bins as cost-index sets.
inline std::vector<std::vector<int>> optimal_bins(const std::vector<Cost>& costs, Cost budget) {
  const int n = static_cast<int>(costs.size());
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Cost> sum(full + 1, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    const int low = __builtin_ctz(m);
    sum[m] = sum[m & (m - 1)] + costs[static_cast<std::size_t>(low)];
  }
  std::vector<int> dp(full + 1, std::numeric_limits<int>::max() / 2);
  std::vector<std::uint32_t> pick(full + 1, 0);
  dp[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (~m + 1);
    const std::uint32_t rest = m ^ low;
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      const std::uint32_t bin = s | low;
      if (sum[bin] <= budget && dp[m ^ bin] + 1 < dp[m]) {
        dp[m] = dp[m ^ bin] + 1;
        pick[m] = bin;
      }
      if (s == 0) break;
    }
  }
  std::vector<std::vector<int>> bins;
  for (std::uint32_t m = full; m; m ^= pick[m]) {
    std::vector<int> b;
    for (int i = 0; i < n; ++i)
      if (pick[m] >> i & 1) b.push_back(i);
    bins.push_back(b);
  }
  return bins;
}

// Maximum matching size by exhaustive search over left vertices.
inline int brute_matching(const std::vector<int>& left, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> used;
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (i == left.size()) return 0;
    int best = go(i + 1);
    for (const auto& [u, v] : edges) {
      if (u != left[i] || std::find(used.begin(), used.end(), v) != used.end()) continue;
      used.push_back(v);
      best = std::max(best, 1 + go(i + 1));
      used.pop_back();
    }
    return best;
  };
  return go(0);
}

// Feasibility of one drone doing `ids` with some subset of swaps: tries every subset of stations
// (swap instances only), checking each candidate with validate_assignment.
inline bool feasible_by_subsets(const Instance& inst, const std::vector<int>& ids) {
  const int r = inst.r();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    DroneAssignment a;
    a.drone = 1;
    a.deliveries = ids;
    for (int l = 0; l < r; ++l)
      if (mask >> l & 1) a.services.push_back({l + 1, inst.stations[static_cast<std::size_t>(l)].span});
    if (validate_assignment(inst, a).empty()) return true;
  }
  return false;
}

// Optimum by enumerating every set partition (swap instances, n <= ~8).
inline int brute_optimum(const Instance& inst) {
  const int n = inst.n();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::map<std::vector<int>, bool> memo;
  auto block_ok = [&](const std::vector<int>& ids) {
    auto it = memo.find(ids);
    if (it != memo.end()) return it->second;
    return memo[ids] = feasible_by_subsets(inst, ids);
  };
  int best = n;
  std::function<void(int, int)> go = [&](int i, int blocks) {
    if (blocks >= best) return;
    if (i == n) {
      std::vector<std::vector<int>> groups(static_cast<std::size_t>(blocks));
      for (int j = 0; j < n; ++j) groups[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(j + 1);
      for (const auto& g : groups)
        if (!block_ok(g)) return;
      best = blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(i)] = b;
      go(i + 1, std::max(blocks, b + 1));
    }
  };
  go(0, 0);
  return best;
}

inline std::vector<Cost> costs_of(const std::vector<Delivery>& items) {
  std::vector<Cost> out;
  for (const Delivery& d : items) out.push_back(d.cost);
  return out;
}

inline bool same_partition_cover(const Partition& p, const std::vector<Delivery>& items) {
  std::vector<int> ids;
  for (const Block& b : p.blocks) ids.insert(ids.end(), b.ids.begin(), b.ids.end());
  std::sort(ids.begin(), ids.end());
  std::vector<int> want;
  for (const Delivery& d : items) want.push_back(d.id);
  std::sort(want.begin(), want.end());
  return ids == want;
}

}  // namespace support
