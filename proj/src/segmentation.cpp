#include "ddp/segmentation.hpp"

#include <algorithm>

namespace ddp {

int Segmentation::first(int l) const {
  const auto& s = first_sets.at(static_cast<std::size_t>(l - 1));
  return s.empty() ? 0 : s.front();
}

int Segmentation::last(int l) const {
  const auto& s = last_sets.at(static_cast<std::size_t>(l - 1));
  return s.empty() ? 0 : s.front();
}

namespace {

std::vector<int> ids_by_launch(const Instance& inst) {
  std::vector<int> ids;
  for (const Delivery& d : inst.deliveries) ids.push_back(d.id);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Time la = inst.delivery(a).span.lo;
    const Time lb = inst.delivery(b).span.lo;
    return la != lb ? la < lb : a < b;
  });
  return ids;
}

}  // namespace

Segmentation segment(const Instance& inst) {
  const int r = inst.r();
  Segmentation s;
  s.segments.assign(static_cast<std::size_t>(r + 1), {});
  s.first_sets.assign(static_cast<std::size_t>(r + 1), {});
  s.last_sets.assign(static_cast<std::size_t>(r + 1), {});
  for (int id : ids_by_launch(inst)) {
    const Interval& span = inst.delivery(id).span;
    int l = 1;
    while (l <= r && span.lo >= inst.station(l).span.lo) ++l;
    const auto idx = static_cast<std::size_t>(l - 1);
    s.segments[idx].push_back(id);
    if (l >= 2 && span.contains(inst.station(l - 1).span.hi)) s.first_sets[idx].push_back(id);
    if (l <= r && span.contains(inst.station(l).span.lo)) s.last_sets[idx].push_back(id);
  }
  return s;
}

std::vector<std::vector<int>> segment_by_departure(const Instance& inst) {
  const int r = inst.r();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(r + 1));
  for (int id : ids_by_launch(inst)) {
    const Time launch = inst.delivery(id).span.lo;
    int l = 1;
    while (l <= r && launch > inst.station(l).span.hi) ++l;
    out[static_cast<std::size_t>(l - 1)].push_back(id);
  }
  return out;
}

std::vector<Delivery> pick(const Instance& inst, const std::vector<int>& ids) {
  std::vector<Delivery> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(inst.delivery(id));
  return out;
}

}  // namespace ddp
