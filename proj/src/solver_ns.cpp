#include "ddp/solver_ns.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace ddp {

Rational ns_bound(int opt, int omega, const EpsilonStats& eps) {
  const Rational slack = Rational(1) - eps.eps_max;
  return Rational(opt) / slack + Rational(omega) * (Rational(1) - eps.eps_min / slack);
}

namespace {

std::vector<Block> pack_classes(const std::vector<Delivery>& items, Cost budget, FitRule rule,
                                std::vector<int>* per_color) {
  const Coloring col = color_min(items);
  std::vector<std::vector<Delivery>> classes(static_cast<std::size_t>(col.color_count));
  for (const Delivery& d : items) classes[static_cast<std::size_t>(col.of(d.id) - 1)].push_back(d);
  std::vector<Block> out;
  if (per_color) per_color->clear();
  for (auto& cls : classes) {
    std::stable_sort(cls.begin(), cls.end(), [](const Delivery& a, const Delivery& b) {
      if (a.span.lo != b.span.lo) return a.span.lo < b.span.lo;
      return a.id < b.id;
    });
    Partition p = greedy_pack(cls, budget, rule);
    if (per_color) per_color->push_back(p.m());
    for (Block& b : p.blocks) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<Block> ns_blocks(const std::vector<Delivery>& items, Cost budget, std::vector<int>* per_color) {
  return pack_classes(items, budget, FitRule::BestFit, per_color);
}

NsReport solve_ns(const Instance& inst, FitRule rule) {
  if (!inst.stations.empty()) throw std::invalid_argument("solve_ns: instance has stations; use solve_sc");
  const auto t0 = std::chrono::steady_clock::now();
  NsReport rep;
  const std::vector<Block> blocks = pack_classes(inst.deliveries, inst.budget, rule, &rep.per_color);
  for (const Block& b : blocks) {
    DroneAssignment a;
    a.drone = rep.schedule.drone_count() + 1;
    a.deliveries = b.ids;
    rep.schedule.drones.push_back(std::move(a));
  }
  rep.drones_used = rep.schedule.drone_count();
  rep.omega = static_cast<int>(rep.per_color.size());
  rep.runtime_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
  if (!inst.deliveries.empty()) rep.eps = epsilon_stats(inst);
  return rep;
}

}  // namespace ddp
