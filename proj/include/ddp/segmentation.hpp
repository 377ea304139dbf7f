#pragma once

#include <vector>

#include "ddp/model.hpp"

namespace ddp {

// Split of the deliveries by launch time relative to station arrivals.
// Segment l (1-based, 1..r+1) holds launches in [arrive(l-1), arrive(l)).
struct Segmentation {
  std::vector<std::vector<int>> segments;    // [l-1] -> ids, launch order
  std::vector<std::vector<int>> first_sets;  // [l-1] -> ids of segment l containing depart(l-1)
  std::vector<std::vector<int>> last_sets;   // [l-1] -> ids of segment l containing arrive(l)

  int count() const { return static_cast<int>(segments.size()); }
  const std::vector<int>& seg(int l) const { return segments.at(static_cast<std::size_t>(l - 1)); }
  // Single markers for conflict-free inputs; 0 when absent.
  int first(int l) const;
  int last(int l) const;
};

Segmentation segment(const Instance& inst);

// Split by departures: segment l holds launches in (depart(l-1), depart(l)].
std::vector<std::vector<int>> segment_by_departure(const Instance& inst);

std::vector<Delivery> pick(const Instance& inst, const std::vector<int>& ids);

}  // namespace ddp
