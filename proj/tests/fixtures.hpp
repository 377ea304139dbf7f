#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "ddp/model.hpp"

namespace fixtures {

using ddp::Instance;
using ddp::kScale;

// Deliveries as (launch, rendezvous, cost) and stations as (arrive, depart), in model units.
inline Instance make(std::int64_t budget, std::initializer_list<std::tuple<int, int, int>> deliveries,
                     std::initializer_list<std::pair<int, int>> stations = {},
                     ddp::StationMode mode = ddp::StationMode::Swap) {
  Instance inst;
  inst.budget = budget * kScale;
  int id = 0;
  for (const auto& [lo, hi, cost] : deliveries)
    inst.deliveries.push_back({++id, {lo * kScale, hi * kScale}, cost * kScale});
  id = 0;
  for (const auto& [lo, hi] : stations) inst.stations.push_back({++id, {lo * kScale, hi * kScale}, mode, {}});
  return inst;
}

// Eight deliveries, two swap stations; the optimum is 4 drones with stations and 6 without.
inline Instance section2() {
  return make(10,
              {{0, 5, 6}, {3, 9, 8}, {1, 4, 4}, {7, 15, 9}, {10, 15, 5}, {9, 14, 7}, {19, 24, 5}, {19, 25, 6}},
              {{6, 8}, {16, 18}});
}

// Conflict-free walkthrough: 23 deliveries, three swap stations.
inline Instance nc_walkthrough() {
  return make(10,
              {{0, 1, 3},   {2, 3, 5},   {4, 5, 9},   {6, 7, 2},   {8, 9, 3},   {10, 12, 3}, {13, 17, 6}, {18, 19, 6},
               {20, 21, 6}, {22, 23, 3}, {24, 25, 3}, {26, 27, 2}, {28, 30, 1}, {31, 35, 6}, {36, 37, 6}, {38, 39, 2},
               {40, 41, 5}, {42, 43, 2}, {44, 46, 2}, {47, 51, 6}, {52, 53, 6}, {54, 55, 4}, {56, 57, 4}},
              {{11, 15}, {29, 33}, {45, 49}});
}

// Seventeen deliveries, two swap stations, omega 3; exercises the matching-based variant.
inline Instance sc_walkthrough() {
  return make(10,
              {{0, 5, 2},    {1, 6, 3},    {2, 7, 3},                 // I1..I3: early triple
               {14, 26, 4},  {16, 21, 3},  {17, 22, 3},               // left of station 1
               {27, 36, 7},  {28, 37, 5},  {25, 35, 9},               // right of station 1
               {38, 45, 2},  {40, 52, 6},  {42, 51, 5},  {47, 53, 6},  // I10; left of station 2
               {55, 65, 9},  {58, 66, 5},                             // right of station 2
               {70, 75, 5},  {72, 78, 5}},
              {{20, 30}, {50, 60}});
}

}  // namespace fixtures
