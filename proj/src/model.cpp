#include "ddp/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ddp {

bool conflicts(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

Cost charge_to(const Instance& inst, const Station& st, Cost remaining, Time len) {
  if (len <= 0) return std::min(remaining, inst.budget);
  const Rational rate = st.rate ? *st.rate : Rational(inst.budget, st.span.length());
  const __int128 gain = static_cast<__int128>(len) * rate.num() / rate.den();
  const __int128 total = static_cast<__int128>(remaining) + gain;
  return total >= inst.budget ? inst.budget : static_cast<Cost>(total);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonPositiveBudget: return "NonPositiveBudget";
    case ViolationKind::BadDeliveryId: return "BadDeliveryId";
    case ViolationKind::EmptyDeliveryInterval: return "EmptyDeliveryInterval";
    case ViolationKind::CostOutOfRange: return "CostOutOfRange";
    case ViolationKind::BadStationId: return "BadStationId";
    case ViolationKind::EmptyStationInterval: return "EmptyStationInterval";
    case ViolationKind::StationsOverlap: return "StationsOverlap";
    case ViolationKind::ChargeRateTooLow: return "ChargeRateTooLow";
    case ViolationKind::DeliveryInsideStation: return "DeliveryInsideStation";
    case ViolationKind::DeliverySpansTwoStations: return "DeliverySpansTwoStations";
    case ViolationKind::UnknownDelivery: return "UnknownDelivery";
    case ViolationKind::UncoveredDelivery: return "UncoveredDelivery";
    case ViolationKind::DuplicateCoverage: return "DuplicateCoverage";
    case ViolationKind::UnknownStation: return "UnknownStation";
    case ViolationKind::ServiceOutsideStation: return "ServiceOutsideStation";
    case ViolationKind::PartialSwap: return "PartialSwap";
    case ViolationKind::IntervalOverlap: return "IntervalOverlap";
    case ViolationKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::string describe(const Violation& v) {
  std::string out = to_string(v.kind);
  if (!v.ids.empty()) {
    out += " {";
    for (std::size_t i = 0; i < v.ids.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v.ids[i]);
    }
    out += "}";
  }
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.budget <= 0) out.push_back({ViolationKind::NonPositiveBudget, {}, "budget must be positive"});

  for (std::size_t i = 0; i < inst.deliveries.size(); ++i) {
    const Delivery& d = inst.deliveries[i];
    if (d.id != static_cast<int>(i) + 1)
      out.push_back({ViolationKind::BadDeliveryId, {d.id}, "expected id " + std::to_string(i + 1)});
    if (d.span.lo >= d.span.hi) out.push_back({ViolationKind::EmptyDeliveryInterval, {d.id}, ""});
    if (d.cost <= 0 || d.cost > inst.budget) out.push_back({ViolationKind::CostOutOfRange, {d.id}, ""});
  }

  for (std::size_t i = 0; i < inst.stations.size(); ++i) {
    const Station& s = inst.stations[i];
    if (s.id != static_cast<int>(i) + 1)
      out.push_back({ViolationKind::BadStationId, {s.id}, "expected id " + std::to_string(i + 1)});
    if (s.span.lo >= s.span.hi) {
      out.push_back({ViolationKind::EmptyStationInterval, {s.id}, ""});
      continue;
    }
    if (i > 0 && inst.stations[i - 1].span.hi >= s.span.lo)
      out.push_back({ViolationKind::StationsOverlap, {inst.stations[i - 1].id, s.id}, ""});
    if (s.mode == StationMode::Charge && inst.budget > 0 &&
        charge_to(inst, s, 0, s.span.length()) < inst.budget)
      out.push_back({ViolationKind::ChargeRateTooLow, {s.id}, "full-interval charge must reach the budget"});
  }

  for (const Delivery& d : inst.deliveries) {
    std::vector<int> touched;
    for (const Station& s : inst.stations) {
      if (s.span.lo <= d.span.lo && d.span.hi <= s.span.hi)
        out.push_back({ViolationKind::DeliveryInsideStation, {d.id, s.id}, ""});
      if (conflicts(d.span, s.span)) touched.push_back(s.id);
    }
    if (touched.size() > 1) out.push_back({ViolationKind::DeliverySpansTwoStations, {d.id}, ""});
  }
  return out;
}

std::vector<Violation> validate_assignment(const Instance& inst, const DroneAssignment& a) {
  std::vector<Violation> out;
  struct Event {
    Interval span;
    int delivery;  // > 0 for deliveries
    int station;   // > 0 for services
  };
  std::vector<Event> events;
  for (int id : a.deliveries) {
    if (id < 1 || id > inst.n()) continue;  // reported by the caller
    events.push_back({inst.delivery(id).span, id, 0});
  }
  for (const Service& s : a.services) {
    if (s.station < 1 || s.station > inst.r()) {
      out.push_back({ViolationKind::UnknownStation, {a.drone, s.station}, ""});
      continue;
    }
    const Station& st = inst.station(s.station);
    if (s.span.lo > s.span.hi || s.span.lo < st.span.lo || s.span.hi > st.span.hi) {
      out.push_back({ViolationKind::ServiceOutsideStation, {a.drone, s.station}, ""});
      continue;
    }
    if (st.mode == StationMode::Swap && !(s.span == st.span)) {
      out.push_back({ViolationKind::PartialSwap, {a.drone, s.station}, ""});
      continue;
    }
    events.push_back({s.span, 0, s.station});
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
    if (x.span.lo != y.span.lo) return x.span.lo < y.span.lo;
    return x.span.hi < y.span.hi;
  });
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    for (std::size_t k = i + 1; k < events.size() && events[k].span.lo <= events[i].span.hi; ++k) {
      const Event& x = events[i];
      const Event& y = events[k];
      out.push_back({ViolationKind::IntervalOverlap,
                     {a.drone, x.delivery ? x.delivery : -x.station, y.delivery ? y.delivery : -y.station},
                     "negative ids denote stations"});
    }
  }
  if (!out.empty()) return out;

  Cost battery = inst.budget;
  for (const Event& e : events) {
    if (e.delivery) {
      const Cost c = inst.delivery(e.delivery).cost;
      if (c > battery) {
        out.push_back({ViolationKind::BudgetExceeded, {a.drone, e.delivery},
                       "needs " + std::to_string(c) + ", has " + std::to_string(battery)});
        return out;
      }
      battery -= c;
    } else {
      const Station& st = inst.station(e.station);
      battery = st.mode == StationMode::Swap ? inst.budget : charge_to(inst, st, battery, e.span.length());
    }
  }
  return out;
}

std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& sched) {
  std::vector<Violation> out;
  std::vector<int> seen(static_cast<std::size_t>(inst.n()) + 1, 0);
  for (const DroneAssignment& a : sched.drones) {
    for (int id : a.deliveries) {
      if (id < 1 || id > inst.n()) {
        out.push_back({ViolationKind::UnknownDelivery, {a.drone, id}, ""});
        continue;
      }
      if (seen[static_cast<std::size_t>(id)]++ == 1) out.push_back({ViolationKind::DuplicateCoverage, {id}, ""});
    }
    auto per = validate_assignment(inst, a);
    out.insert(out.end(), per.begin(), per.end());
  }
  for (int id = 1; id <= inst.n(); ++id)
    if (seen[static_cast<std::size_t>(id)] == 0) out.push_back({ViolationKind::UncoveredDelivery, {id}, ""});
  return out;
}

EpsilonStats epsilon_stats(const Instance& inst) {
  if (inst.deliveries.empty()) throw std::invalid_argument("epsilon_stats: empty instance");
  Cost lo = inst.deliveries.front().cost;
  Cost hi = lo;
  for (const Delivery& d : inst.deliveries) {
    lo = std::min(lo, d.cost);
    hi = std::max(hi, d.cost);
  }
  EpsilonStats s;
  s.eps_min = Rational(lo, inst.budget);
  s.eps_max = min(Rational(1, 2), Rational(hi, inst.budget));
  s.psi = (s.eps_max - s.eps_min) / (Rational(1) - s.eps_max);
  return s;
}

Instance without_stations(const Instance& inst) {
  Instance out = inst;
  out.stations.clear();
  return out;
}

bool conflict_free(const Instance& inst) {
  std::vector<Interval> spans;
  spans.reserve(inst.deliveries.size());
  for (const Delivery& d : inst.deliveries) spans.push_back(d.span);
  std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < spans.size(); ++i)
    if (spans[i].lo <= spans[i - 1].hi) return false;
  return true;
}

bool all_swap(const Instance& inst) {
  return std::all_of(inst.stations.begin(), inst.stations.end(),
                     [](const Station& s) { return s.mode == StationMode::Swap; });
}

}  // namespace ddp
