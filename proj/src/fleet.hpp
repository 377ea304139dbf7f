#pragma once

#include <functional>
#include <vector>

#include "ddp/model.hpp"

namespace ddp::detail {

// Drone pool used by the segment-based solvers. Blocks are appended in time order, so a
// drone's battery is tracked as a single running value.
class Fleet {
 public:
  explicit Fleet(const Instance& inst) : inst_(inst) {}

  int size() const { return static_cast<int>(drones_.size()); }
  bool full(int drone) const { return state(drone).battery == inst_.budget; }
  Cost battery(int drone) const { return state(drone).battery; }
  bool fits(int drone, const std::vector<int>& block) const;
  bool touches(int drone, const Interval& span) const;

  int open();
  void assign(int drone, const std::vector<int>& block);

  // Lowest-id drone that is not excluded, has a full battery and no overlap with the block;
  // opens a new drone if none qualifies.
  int pick(const std::vector<int>& block, const std::function<bool(int)>& excluded);

  // Swap, or charge over the whole waiting interval.
  void service_full(int drone, const Station& st);
  // Charge over a sub-interval (no-op for swap stations or empty spans).
  void service_partial(int drone, const Station& st, const Interval& span);

  // Services every drone with battery below budget that is not excluded and does not overlap
  // the waiting interval.
  void service_all(const Station& st, const std::function<bool(int)>& excluded);

  Schedule schedule() const;

 private:
  struct State {
    Cost battery = 0;
    std::vector<Interval> busy;
    DroneAssignment plan;
  };
  const State& state(int drone) const { return drones_.at(static_cast<std::size_t>(drone - 1)); }
  State& state(int drone) { return drones_.at(static_cast<std::size_t>(drone - 1)); }

  const Instance& inst_;
  std::vector<State> drones_;
};

}  // namespace ddp::detail
