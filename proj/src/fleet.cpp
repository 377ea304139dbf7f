#include "fleet.hpp"

namespace ddp::detail {

bool Fleet::touches(int drone, const Interval& span) const {
  for (const Interval& b : state(drone).busy)
    if (conflicts(b, span)) return true;
  return false;
}

bool Fleet::fits(int drone, const std::vector<int>& block) const {
  Cost total = 0;
  for (int id : block) {
    const Delivery& d = inst_.delivery(id);
    if (touches(drone, d.span)) return false;
    total += d.cost;
  }
  return total <= state(drone).battery;
}

int Fleet::open() {
  State s;
  s.battery = inst_.budget;
  s.plan.drone = size() + 1;
  drones_.push_back(std::move(s));
  return size();
}

void Fleet::assign(int drone, const std::vector<int>& block) {
  State& s = state(drone);
  for (int id : block) {
    const Delivery& d = inst_.delivery(id);
    s.busy.push_back(d.span);
    s.plan.deliveries.push_back(id);
    s.battery -= d.cost;
  }
}

int Fleet::pick(const std::vector<int>& block, const std::function<bool(int)>& excluded) {
  for (int d = 1; d <= size(); ++d)
    if (!excluded(d) && full(d) && fits(d, block)) return d;
  return open();
}

void Fleet::service_full(int drone, const Station& st) {
  State& s = state(drone);
  s.battery = st.mode == StationMode::Swap ? inst_.budget : charge_to(inst_, st, s.battery, st.span.length());
  s.busy.push_back(st.span);
  s.plan.services.push_back({st.id, st.span});
}

void Fleet::service_partial(int drone, const Station& st, const Interval& span) {
  if (st.mode == StationMode::Swap || span.hi < span.lo) return;
  State& s = state(drone);
  s.battery = charge_to(inst_, st, s.battery, span.length());
  s.busy.push_back(span);
  s.plan.services.push_back({st.id, span});
}

void Fleet::service_all(const Station& st, const std::function<bool(int)>& excluded) {
  for (int d = 1; d <= size(); ++d)
    if (!excluded(d) && !full(d) && !touches(d, st.span)) service_full(d, st);
}

Schedule Fleet::schedule() const {
  Schedule out;
  for (const State& s : drones_) out.drones.push_back(s.plan);
  return out;
}

}  // namespace ddp::detail
