#pragma once

#include <optional>
#include <vector>

#include "ddp/interval_graph.hpp"
#include "ddp/model.hpp"
#include "ddp/packing.hpp"

namespace ddp {

struct NsReport {
  Schedule schedule;
  int drones_used = 0;
  std::vector<int> per_color;  // blocks per color class
  int omega = 0;
  EpsilonStats eps;
  double runtime_us = 0;
};

// Upper bound OPT/(1-eps_max) + omega*(1 - eps_min/(1-eps_max)).
Rational ns_bound(int opt, int omega, const EpsilonStats& eps);

// Blocks of the coloring + greedy pipeline on an arbitrary delivery subset.
// Blocks are ordered by color, then by opening order within a color.
std::vector<Block> ns_blocks(const std::vector<Delivery>& items, Cost budget, std::vector<int>* per_color = nullptr);

// Throws std::invalid_argument if the instance has stations.
NsReport solve_ns(const Instance& inst, FitRule rule = FitRule::BestFit);

}  // namespace ddp
