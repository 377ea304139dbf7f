#pragma once

#include <utility>
#include <vector>

#include "ddp/model.hpp"
#include "ddp/solver_nc.hpp"

namespace ddp {

// Boundary graph at one station: left intervals contain the arrival, right intervals contain the
// departure and are not left. Edges join compatible pairs whose costs fit one battery.
struct BoundaryBipartite {
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::pair<int, int>> edges;     // (left id, right id), sorted
  std::vector<std::pair<int, int>> matching;  // maximum matching, sorted by left id
  int x() const { return static_cast<int>(matching.size()); }
  int z() const { return static_cast<int>(left.size() + right.size()) - x(); }
};

// `items` are the deliveries of one departure-based segment.
BoundaryBipartite build_boundary_bipartite(const std::vector<Delivery>& items, const Station& st, Cost budget);

// Maximum bipartite matching by repeated augmenting paths, left vertices in ascending order.
std::vector<std::pair<int, int>> max_matching(const std::vector<int>& left, const std::vector<int>& right,
                                              const std::vector<std::pair<int, int>>& edges);

struct ScReport {
  Schedule schedule;
  int drones_used = 0;
  Variant variant = Variant::Base;
  int omega = 0;
  std::vector<int> m;  // blocks per segment
  int m_max = 0;
  std::vector<int> z;  // per station (modified only)
  int z_max = 0;
  int opened = 0;      // m_max + 2*omega (base) or m_max + z_max (modified)
  std::vector<std::vector<BlockAssignment>> segments;
  std::vector<std::vector<int>> ext_drones;  // per station: drones holding boundary intervals (modified)
  double runtime_us = 0;
};

// Works with swap and charge stations.
ScReport solve_sc_base(const Instance& inst);
// Throws std::invalid_argument if any station is in charge mode.
ScReport solve_sc_modified(const Instance& inst);

// (2 + psi) * OPT + 2 * omega
Rational sc_bound(int opt, int omega, const EpsilonStats& eps);
// (3 + psi) * OPT
Rational sc_mod_bound(int opt, const EpsilonStats& eps);

}  // namespace ddp
