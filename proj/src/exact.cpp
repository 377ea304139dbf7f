#include "ddp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <stdexcept>

#include "ddp/interval_graph.hpp"
#include "ddp/segmentation.hpp"
#include "ddp/solver_nc.hpp"
#include "ddp/solver_ns.hpp"
#include "ddp/solver_sc.hpp"

namespace ddp {

namespace {

using Clock = std::chrono::steady_clock;
constexpr Time kNever = std::numeric_limits<Time>::min();

Cost ceil_div(Cost a, Cost b) { return (a + b - 1) / b; }

// Battery at `launch` for a drone whose last delivery ended at `last_end`, with services in between.
// When `out` is given, the services performed are appended to it.
Cost advance(const Instance& inst, Time last_end, Cost battery, Time launch, std::vector<Service>* out = nullptr) {
  if (last_end == kNever) return inst.budget;
  for (const Station& st : inst.stations) {
    if (st.span.hi <= last_end) continue;
    if (st.span.lo >= launch) break;
    if (battery >= inst.budget) break;
    if (st.mode == StationMode::Swap) {
      if (st.span.lo > last_end && st.span.hi < launch) {
        battery = inst.budget;
        if (out) out->push_back({st.id, st.span});
      }
      continue;
    }
    const Interval span{std::max(st.span.lo, last_end + 1), std::min(st.span.hi, launch - 1)};
    if (span.hi < span.lo) continue;
    const Cost next = charge_to(inst, st, battery, span.length());
    if (next > battery) {
      battery = next;
      if (out) out->push_back({st.id, span});
    }
  }
  return battery;
}

struct DroneState {
  Time last_end = kNever;
  Cost battery = 0;
  int last_seg = 0;
};

class Search {
 public:
  Search(const Instance& inst, const OracleLimits& limits) : inst_(inst), limits_(limits) {
    for (const Delivery& d : inst.deliveries) order_.push_back(&d);
    std::sort(order_.begin(), order_.end(), [](const Delivery* a, const Delivery* b) {
      return a->span.lo != b->span.lo ? a->span.lo < b->span.lo : a->id < b->id;
    });
    const Segmentation seg = segment(inst);
    std::vector<int> seg_of(static_cast<std::size_t>(inst.n() + 1), 0);
    for (int l = 1; l <= seg.count(); ++l)
      for (int id : seg.seg(l)) seg_of[static_cast<std::size_t>(id)] = l;
    const std::size_t n = order_.size();
    seg_.resize(n);
    seg_rest_.assign(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) seg_[k] = seg_of[static_cast<std::size_t>(order_[k]->id)];
    for (std::size_t k = n; k-- > 0;)
      seg_rest_[k] = order_[k]->cost + (k + 1 < n && seg_[k + 1] == seg_[k] ? seg_rest_[k + 1] : 0);
    choice_.assign(n, 0);
  }

  void run(int root_lb, int incumbent) {
    best_ = incumbent;
    root_lb_ = root_lb;
    start_ = Clock::now();
    if (best_ > root_lb_) dfs(0);
    exhausted_ = !aborted_;
  }

  bool exhausted() const { return exhausted_; }
  int best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& best_choice() const { return best_choice_; }

 private:
  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ >= limits_.max_nodes) aborted_ = true;
    if ((nodes_ & 4095) == 0 && limits_.max_ms > 0) {
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
      if (ms > limits_.max_ms) aborted_ = true;
    }
    return aborted_;
  }

  int node_bound(std::size_t k) const {
    const int open = static_cast<int>(drones_.size());
    Cost slack = 0;
    for (const DroneState& d : drones_) slack += d.last_seg == seg_[k] ? d.battery : inst_.budget;
    const Cost deficit = seg_rest_[k] - slack;
    return open + (deficit > 0 ? static_cast<int>(ceil_div(deficit, inst_.budget)) : 0);
  }

  void dfs(std::size_t k) {
    ++nodes_;
    if (out_of_budget()) return;
    const int open = static_cast<int>(drones_.size());
    if (k == order_.size()) {
      if (open < best_) {
        best_ = open;
        best_choice_ = choice_;
      }
      return;
    }
    if (std::max(open, node_bound(k)) >= best_) return;
    const Delivery& d = *order_[k];
    for (int i = 0; i < open; ++i) {
      const DroneState saved = drones_[static_cast<std::size_t>(i)];
      if (saved.last_end >= d.span.lo) continue;
      bool duplicate = false;
      for (int j = 0; j < i && !duplicate; ++j) {
        const DroneState& o = drones_[static_cast<std::size_t>(j)];
        duplicate = o.last_end == saved.last_end && o.battery == saved.battery && o.last_seg == saved.last_seg;
      }
      if (duplicate) continue;
      const Cost avail = advance(inst_, saved.last_end, saved.battery, d.span.lo);
      if (avail < d.cost) continue;
      drones_[static_cast<std::size_t>(i)] = {d.span.hi, avail - d.cost, seg_[k]};
      choice_[k] = i;
      dfs(k + 1);
      drones_[static_cast<std::size_t>(i)] = saved;
      if (aborted_ || best_ <= root_lb_) return;
    }
    if (open + 1 < best_) {
      drones_.push_back({d.span.hi, inst_.budget - d.cost, seg_[k]});
      choice_[k] = open;
      dfs(k + 1);
      drones_.pop_back();
    }
  }

  const Instance& inst_;
  OracleLimits limits_;
  std::vector<const Delivery*> order_;
  std::vector<int> seg_;
  std::vector<Cost> seg_rest_;  // cost of deliveries k.. that share k's segment
  std::vector<DroneState> drones_;
  std::vector<int> choice_;
  std::vector<int> best_choice_;
  int best_ = 0;
  int root_lb_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool exhausted_ = false;
  Clock::time_point start_;

 public:
  const std::vector<const Delivery*>& order() const { return order_; }
};

int segment_bound(const Instance& inst, const std::vector<std::vector<int>>& segments) {
  int lb = 0;
  for (const auto& ids : segments) {
    Cost total = 0;
    for (int id : ids) total += inst.delivery(id).cost;
    lb = std::max(lb, static_cast<int>(ceil_div(total, inst.budget)));
  }
  return lb;
}

// Rebuilds a schedule from per-delivery drone indices (in launch order).
Schedule build_schedule(const Instance& inst, const std::vector<const Delivery*>& order, const std::vector<int>& choice) {
  int count = 0;
  for (int c : choice) count = std::max(count, c + 1);
  Schedule s;
  s.drones.resize(static_cast<std::size_t>(count));
  std::vector<Time> last_end(static_cast<std::size_t>(count), kNever);
  std::vector<Cost> battery(static_cast<std::size_t>(count), inst.budget);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto i = static_cast<std::size_t>(choice[k]);
    DroneAssignment& a = s.drones[i];
    a.drone = choice[k] + 1;
    const Delivery& d = *order[k];
    battery[i] = advance(inst, last_end[i], battery[i], d.span.lo, &a.services) - d.cost;
    last_end[i] = d.span.hi;
    a.deliveries.push_back(d.id);
  }
  return s;
}

// Best heuristic schedule among the solvers that accept this instance.
std::optional<Schedule> heuristic(const Instance& inst) {
  std::optional<Schedule> best;
  auto offer = [&](const Schedule& s) {
    if (!validate_schedule(inst, s).empty()) return;
    if (!best || s.drone_count() < best->drone_count()) best = s;
  };
  try {
    if (inst.r() == 0) offer(solve_ns(inst).schedule);
    offer(solve_sc_base(inst).schedule);
    if (all_swap(inst)) offer(solve_sc_modified(inst).schedule);
    if (conflict_free(inst)) offer(solve_nc(inst).schedule);
  } catch (const std::invalid_argument&) {
  }
  return best;
}

}  // namespace

int exact_lower_bound(const Instance& inst) {
  if (inst.n() == 0) return 0;
  int lb = max_clique(inst.deliveries).omega;
  lb = std::max(lb, segment_bound(inst, segment(inst).segments));
  if (all_swap(inst)) lb = std::max(lb, segment_bound(inst, segment_by_departure(inst)));
  return lb;
}

OracleResult solve_exact(const Instance& inst, const OracleLimits& limits) {
  OracleResult res;
  if (inst.n() == 0) {
    res.proven = true;
    return res;
  }
  res.lower_bound = exact_lower_bound(inst);
  const std::optional<Schedule> warm = heuristic(inst);
  const int incumbent = warm ? warm->drone_count() : inst.n();

  Search search(inst, limits);
  search.run(res.lower_bound, incumbent + (warm ? 0 : 1));
  res.nodes = search.nodes();
  res.proven = search.exhausted();
  if (!search.best_choice().empty()) {
    res.schedule = build_schedule(inst, search.order(), search.best_choice());
  } else if (warm) {
    res.schedule = *warm;
  }
  res.optimum = res.schedule.drone_count();
  return res;
}

}  // namespace ddp
