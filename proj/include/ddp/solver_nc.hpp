#pragma once

#include <vector>

#include "ddp/model.hpp"
#include "ddp/packing.hpp"
#include "ddp/segmentation.hpp"

namespace ddp {

enum class Variant { Base, Modified };

struct BlockAssignment {
  std::vector<int> ids;
  int drone = 0;
};

struct NcReport {
  Schedule schedule;
  int drones_used = 0;
  Variant variant = Variant::Base;
  std::vector<int> m;   // FFD block count per segment
  int m_max = 0;
  std::vector<int> m_plus;  // block count per segment after cost inflation (modified only)
  int m_plus_max = 0;
  int opened = 0;  // m_max + 2 (base) or m_plus_max + 1 (modified)
  std::vector<std::vector<BlockAssignment>> segments;  // blocks actually used, with drones
  double runtime_us = 0;
};

// Throws std::invalid_argument when two deliveries conflict.
NcReport solve_nc_base(const Instance& inst);
NcReport solve_nc_modified(const Instance& inst);
// Runs both variants and returns the one using fewer drones (base on ties).
NcReport solve_nc(const Instance& inst);

// (11/9)OPT + 24/9 and (3/2)OPT + 3/2; a count must not exceed the smaller.
Rational nc_bound(int opt);

}  // namespace ddp
