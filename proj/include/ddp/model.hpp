#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddp/rational.hpp"

namespace ddp {

// Times and costs are fixed-point integers: one model unit equals kScale milli-units.
using Time = std::int64_t;
using Cost = std::int64_t;
inline constexpr std::int64_t kScale = 1000;

// Closed interval [lo, hi].
struct Interval {
  Time lo = 0;
  Time hi = 0;
  Time length() const { return hi - lo; }
  bool contains(Time t) const { return lo <= t && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed intervals conflict when they share at least one point, endpoints included.
bool conflicts(const Interval& a, const Interval& b);

struct Delivery {
  int id = 0;
  Interval span;
  Cost cost = 0;
};

enum class StationMode { Swap, Charge };

struct Station {
  int id = 0;
  Interval span;
  StationMode mode = StationMode::Swap;
  // Charge rate in milli-cost per milli-time. Unset means budget / span length.
  std::optional<Rational> rate;
};

struct Instance {
  Cost budget = 0;
  std::vector<Delivery> deliveries;  // deliveries[j-1].id == j
  std::vector<Station> stations;     // sorted by arrival, stations[l-1].id == l

  int n() const { return static_cast<int>(deliveries.size()); }
  int r() const { return static_cast<int>(stations.size()); }
  const Delivery& delivery(int id) const { return deliveries.at(static_cast<std::size_t>(id - 1)); }
  const Station& station(int id) const { return stations.at(static_cast<std::size_t>(id - 1)); }
};

// Battery after charging `remaining` at `st` over a sub-interval of length `len`.
Cost charge_to(const Instance& inst, const Station& st, Cost remaining, Time len);

struct Service {
  int station = 0;
  Interval span;
  friend bool operator==(const Service&, const Service&) = default;
};

struct DroneAssignment {
  int drone = 0;
  std::vector<int> deliveries;
  std::vector<Service> services;
};

struct Schedule {
  std::vector<DroneAssignment> drones;
  int drone_count() const { return static_cast<int>(drones.size()); }
};

enum class ViolationKind {
  NonPositiveBudget,
  BadDeliveryId,
  EmptyDeliveryInterval,
  CostOutOfRange,
  BadStationId,
  EmptyStationInterval,
  StationsOverlap,
  ChargeRateTooLow,
  DeliveryInsideStation,
  DeliverySpansTwoStations,
  UnknownDelivery,
  UncoveredDelivery,
  DuplicateCoverage,
  UnknownStation,
  ServiceOutsideStation,
  PartialSwap,
  IntervalOverlap,
  BudgetExceeded,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> ids;  // offending delivery / station / drone ids, meaning depends on kind
  std::string detail;
};

std::string describe(const Violation& v);

std::vector<Violation> validate_instance(const Instance& inst);

// Expects a valid instance. Empty result iff the schedule is feasible and covers every delivery once.
std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& sched);

// Simulates one drone. Returns violations for overlap, bad services and battery shortfall.
std::vector<Violation> validate_assignment(const Instance& inst, const DroneAssignment& a);

struct EpsilonStats {
  Rational eps_min;
  Rational eps_max;
  Rational psi;
};

EpsilonStats epsilon_stats(const Instance& inst);

// Copy of the instance with all stations removed.
Instance without_stations(const Instance& inst);

// True when no two delivery intervals conflict.
bool conflict_free(const Instance& inst);

bool all_swap(const Instance& inst);

}  // namespace ddp
