#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddp/exact.hpp"

namespace ddp {

namespace {

struct Slot {
  Interval span;
  bool station = false;
  int id = 0;
  Cost cost = 0;
};

std::string x(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }
std::string u(int i, int j) { return "u_" + std::to_string(i) + "_" + std::to_string(j); }
std::string y(int i) { return "y_" + std::to_string(i); }

}  // namespace

std::string export_lp(const Instance& inst) {
  if (!all_swap(inst)) throw std::invalid_argument("export_lp: charge stations are not supported");
  const int drones = inst.n();
  const Cost budget = inst.budget;
  const Cost big_m = 10 * budget;

  std::vector<Slot> slots;
  for (const Delivery& d : inst.deliveries) slots.push_back({d.span, false, d.id, d.cost});
  for (const Station& s : inst.stations) slots.push_back({s.span, true, s.id, 0});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.span.lo != b.span.lo) return a.span.lo < b.span.lo;
    return !a.station && b.station;
  });
  // Stations ahead of the first delivery behave like the warehouse.
  while (!slots.empty() && slots.front().station) slots.erase(slots.begin());
  const int count = static_cast<int>(slots.size());
  auto slot = [&](int j) -> const Slot& { return slots[static_cast<std::size_t>(j - 1)]; };

  std::ostringstream lp;
  lp << "\\ drone delivery packing, " << inst.n() << " deliveries, " << inst.r() << " stations\n";
  lp << "\\ slot order:";
  for (int j = 1; j <= count; ++j) lp << ' ' << (slot(j).station ? "s" : "d") << slot(j).id;
  lp << "\nMinimize\n obj:";
  for (int i = 1; i <= drones; ++i) lp << " + " << y(i);
  lp << "\nSubject To\n";

  for (int i = 1; i <= drones; ++i)
    for (int j = 1; j <= count; ++j) lp << " C1_" << i << '_' << j << ": " << x(i, j) << " - " << y(i) << " <= 0\n";
  for (int j = 1; j <= count; ++j) {
    if (slot(j).station) continue;
    lp << " C2_" << j << ":";
    for (int i = 1; i <= drones; ++i) lp << " + " << x(i, j);
    lp << " = 1\n";
  }
  for (int j = 1; j <= count; ++j)
    for (int k = j + 1; k <= count; ++k) {
      if (slot(j).station && slot(k).station) continue;
      if (!conflicts(slot(j).span, slot(k).span)) continue;
      for (int i = 1; i <= drones; ++i)
        lp << " C3_" << i << '_' << j << '_' << k << ": " << x(i, j) << " + " << x(i, k) << " <= 1\n";
    }

  if (inst.r() == 0) {
    for (int i = 1; i <= drones; ++i) {
      lp << " K_" << i << ":";
      for (int j = 1; j <= count; ++j) lp << " + " << slot(j).cost << ' ' << x(i, j);
      lp << " <= " << budget << '\n';
    }
  } else {
    for (int i = 1; i <= drones; ++i) {
      lp << " C5_" << i << ": " << u(i, 1) << " + " << slot(1).cost << ' ' << x(i, 1) << " = " << budget << '\n';
      lp << " C10_" << i << ": " << slot(1).cost << ' ' << x(i, 1) << " <= " << budget << '\n';
      for (int j = 2; j <= count; ++j) {
        if (!slot(j).station) {
          lp << " C6_" << i << '_' << j << ": " << u(i, j) << " - " << u(i, j - 1) << " + " << slot(j).cost << ' '
             << x(i, j) << " = 0\n";
          lp << " C11_" << i << '_' << j << ": " << slot(j).cost << ' ' << x(i, j) << " - " << u(i, j - 1)
             << " <= 0\n";
        } else {
          lp << " C7_" << i << '_' << j << ": " << u(i, j) << " - " << budget << ' ' << x(i, j) << " >= 0\n";
          lp << " C8_" << i << '_' << j << ": " << u(i, j) << " - " << u(i, j - 1) << " - " << big_m << ' '
             << x(i, j) << " <= 0\n";
          lp << " C9_" << i << '_' << j << ": " << u(i, j) << " - " << u(i, j - 1) << " + " << big_m << ' '
             << x(i, j) << " >= 0\n";
        }
      }
    }
  }

  lp << "Bounds\n";
  if (inst.r() > 0) {
    lp << "\\ C4\n";
    for (int i = 1; i <= drones; ++i)
      for (int j = 1; j <= count; ++j) lp << " 0 <= " << u(i, j) << " <= " << budget << '\n';
  }
  lp << "Binary\n\\ C12\n";
  for (int i = 1; i <= drones; ++i) {
    lp << ' ' << y(i);
    for (int j = 1; j <= count; ++j) lp << ' ' << x(i, j);
    lp << '\n';
  }
  lp << "End\n";
  return lp.str();
}

}  // namespace ddp
