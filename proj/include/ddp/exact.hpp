#pragma once

#include <cstdint>
#include <string>

#include "ddp/model.hpp"

namespace ddp {

struct OracleLimits {
  std::uint64_t max_nodes = 10'000'000;
  double max_ms = 0;  // 0 disables the time cap
};

struct OracleResult {
  int optimum = 0;  // best count found; the true optimum when proven
  Schedule schedule;
  std::uint64_t nodes = 0;
  bool proven = false;
  int lower_bound = 0;  // root lower bound
};

// Static lower bound: omega, and per-segment ceil(total cost / budget).
int exact_lower_bound(const Instance& inst);

// Branch and bound over delivery-to-drone partitions in launch order. Each drone services at
// every station it can reach without conflict: a swap when the whole waiting interval is free,
// otherwise a charge over the free portion of the waiting interval.
OracleResult solve_exact(const Instance& inst, const OracleLimits& limits = {});

// Integer program in CPLEX LP format. Swap stations only; throws std::invalid_argument otherwise.
std::string export_lp(const Instance& inst);

}  // namespace ddp
