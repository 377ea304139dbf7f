#include "ddp/solver_nc.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fleet.hpp"

namespace ddp {

Rational nc_bound(int opt) {
  return min(Rational(11, 9) * Rational(opt) + Rational(24, 9), Rational(3, 2) * Rational(opt) + Rational(3, 2));
}

namespace {

using Clock = std::chrono::steady_clock;

void require_conflict_free(const Instance& inst) {
  if (!conflict_free(inst)) throw std::invalid_argument("nc solver: delivery intervals conflict; use solve_sc");
}

Partition ffd_with(const Instance& inst, const std::vector<int>& ids, int bumped = 0, Cost bumped_cost = 0) {
  std::vector<Delivery> items = pick(inst, ids);
  for (Delivery& d : items)
    if (d.id == bumped) d.cost = bumped_cost;
  return ffd(items, inst.budget);
}

// Lowest-index block holding neither marker of its segment, or -1.
int spl_block(const Partition& p, int first_marker, int last_marker) {
  for (int b = 0; b < p.m(); ++b) {
    const auto& ids = p.blocks[static_cast<std::size_t>(b)].ids;
    const bool has_first = first_marker && std::find(ids.begin(), ids.end(), first_marker) != ids.end();
    const bool has_last = last_marker && std::find(ids.begin(), ids.end(), last_marker) != ids.end();
    if (!has_first && !has_last) return b;
  }
  return -1;
}

// Battery the spl drone holds at the launch of `first_id` after partial service at `st`.
Cost spl_remaining(const Instance& inst, const Station& st, Cost spl_cost, int first_id) {
  const Cost rem = inst.budget - spl_cost;
  if (st.mode == StationMode::Swap) return rem;
  const Time until = inst.delivery(first_id).span.lo - 1;
  if (until < st.span.lo) return rem;
  return charge_to(inst, st, rem, until - st.span.lo);
}

struct Plan {
  std::vector<Partition> used;  // [l], 1-based, size r+2
  std::vector<int> spl;         // [l]: block index in used[l-1] whose drone takes S_l^first, or -1
};

NcReport assign(const Instance& inst, const Segmentation& seg, const Plan& plan) {
  const int r = inst.r();
  detail::Fleet fleet(inst);
  std::vector<int> d_last(static_cast<std::size_t>(r + 3), 0);  // offset by 1 so index l-2 >= 0
  auto last_at = [&](int l) -> int& { return d_last[static_cast<std::size_t>(l + 1)]; };
  std::vector<std::set<int>> used_in(static_cast<std::size_t>(r + 2));
  std::vector<int> spl_drone(static_cast<std::size_t>(r + 2), 0);

  NcReport rep;
  for (int l = 1; l <= r + 1; ++l) {
    const Partition& p = plan.used[static_cast<std::size_t>(l)];
    std::vector<BlockAssignment> rows(static_cast<std::size_t>(p.m()));
    auto& mine = used_in[static_cast<std::size_t>(l)];
    const std::set<int>& prev = used_in[static_cast<std::size_t>(l - 1)];

    const int first_block = (l >= 2 && seg.first(l)) ? p.block_of(seg.first(l)) : -1;
    int d_first = 0;
    if (first_block >= 0) {
      const auto& ids = p.blocks[static_cast<std::size_t>(first_block)].ids;
      const int routed = spl_drone[static_cast<std::size_t>(l - 1)];
      if (routed && fleet.fits(routed, ids)) {
        d_first = routed;
      } else {
        const int skip = last_at(l - 2);
        d_first = fleet.pick(ids, [&](int d) { return prev.count(d) > 0 || d == skip; });
      }
      fleet.assign(d_first, ids);
      mine.insert(d_first);
      rows[static_cast<std::size_t>(first_block)] = {ids, d_first};
    }

    const int next_spl = l <= r ? plan.spl[static_cast<std::size_t>(l + 1)] : -1;
    for (int b = 0; b < p.m(); ++b) {
      if (b == first_block) continue;
      const auto& ids = p.blocks[static_cast<std::size_t>(b)].ids;
      const int skip = last_at(l - 1);
      const int d = fleet.pick(ids, [&](int x) { return x == skip || x == d_first || mine.count(x) > 0; });
      fleet.assign(d, ids);
      mine.insert(d);
      rows[static_cast<std::size_t>(b)] = {ids, d};
      if (b == next_spl) spl_drone[static_cast<std::size_t>(l)] = d;
    }

    if (l <= r && seg.last(l)) {
      const int lb = p.block_of(seg.last(l));
      last_at(l) = rows[static_cast<std::size_t>(lb)].drone;
    }
    if (l <= r) {
      const Station& st = inst.station(l);
      const int keep = spl_drone[static_cast<std::size_t>(l)];
      if (keep && st.mode == StationMode::Charge) {
        const Interval span{st.span.lo, inst.delivery(seg.first(l + 1)).span.lo - 1};
        if (span.hi >= span.lo && !fleet.touches(keep, span)) fleet.service_partial(keep, st, span);
      }
      const int skip = last_at(l);
      fleet.service_all(st, [&](int d) { return d == skip || d == keep; });
    }
    rep.segments.push_back(std::move(rows));
  }
  rep.schedule = fleet.schedule();
  rep.drones_used = rep.schedule.drone_count();
  return rep;
}

}  // namespace

NcReport solve_nc_base(const Instance& inst) {
  const auto t0 = Clock::now();
  require_conflict_free(inst);
  const Segmentation seg = segment(inst);
  const int r = inst.r();
  Plan plan;
  plan.used.resize(static_cast<std::size_t>(r + 2));
  plan.spl.assign(static_cast<std::size_t>(r + 2), -1);
  std::vector<int> m;
  for (int l = 1; l <= r + 1; ++l) {
    plan.used[static_cast<std::size_t>(l)] = ffd_with(inst, seg.seg(l));
    m.push_back(plan.used[static_cast<std::size_t>(l)].m());
  }
  NcReport rep = assign(inst, seg, plan);
  rep.variant = Variant::Base;
  rep.m = m;
  rep.m_max = m.empty() ? 0 : *std::max_element(m.begin(), m.end());
  rep.opened = rep.m_max + 2;
  rep.runtime_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  return rep;
}

NcReport solve_nc_modified(const Instance& inst) {
  const auto t0 = Clock::now();
  require_conflict_free(inst);
  const Segmentation seg = segment(inst);
  const int r = inst.r();
  const Cost budget = inst.budget;
  const auto at = [](int l) { return static_cast<std::size_t>(l); };

  std::vector<Partition> base(at(r + 2));
  std::vector<int> m;
  for (int l = 1; l <= r + 1; ++l) {
    base[at(l)] = ffd_with(inst, seg.seg(l));
    m.push_back(base[at(l)].m());
  }
  const int m_max = m.empty() ? 0 : *std::max_element(m.begin(), m.end());

  // Cost inflation, sequential in l. The trigger looks at the partition kept for l-1.
  std::vector<Partition> cand = base;
  std::vector<bool> inflated(at(r + 2), false);
  for (int l = 2; l <= r + 1; ++l) {
    const int f = seg.first(l);
    if (!f || cand[at(l - 1)].m() < m_max) continue;
    const Partition& prev = cand[at(l - 1)];
    const int b = spl_block(prev, l - 1 >= 2 ? seg.first(l - 1) : 0, seg.last(l - 1));
    if (b < 0) continue;
    const Cost rem = spl_remaining(inst, inst.station(l - 1), prev.blocks[at(b)].total, f);
    const Cost bumped = inst.delivery(f).cost + budget - rem;
    if (bumped > budget) continue;
    cand[at(l)] = ffd_with(inst, seg.seg(l), f, bumped);
    inflated[at(l)] = true;
  }
  std::vector<int> m_plus;
  for (int l = 1; l <= r + 1; ++l) m_plus.push_back(cand[at(l)].m());
  const int m_plus_max = m_plus.empty() ? 0 : *std::max_element(m_plus.begin(), m_plus.end());

  // Inflated blocks are used only when the previous segment is at the new maximum.
  Plan plan;
  plan.used.resize(at(r + 2));
  plan.spl.assign(at(r + 2), -1);
  plan.used[1] = base[1];
  for (int l = 2; l <= r + 1; ++l) {
    plan.used[at(l)] = base[at(l)];
    if (!inflated[at(l)] || plan.used[at(l - 1)].m() != m_plus_max) continue;
    const Partition& prev = plan.used[at(l - 1)];
    const int b = spl_block(prev, l - 1 >= 2 ? seg.first(l - 1) : 0, seg.last(l - 1));
    if (b < 0) continue;
    const int f = seg.first(l);
    const Cost rem = spl_remaining(inst, inst.station(l - 1), prev.blocks[at(b)].total, f);
    const Partition& mod = cand[at(l)];
    Cost real = 0;
    for (int id : mod.blocks[at(mod.block_of(f))].ids) real += inst.delivery(id).cost;
    if (real > rem) continue;
    plan.used[at(l)] = mod;
    plan.spl[at(l)] = b;
  }

  NcReport rep = assign(inst, seg, plan);
  rep.variant = Variant::Modified;
  rep.m = m;
  rep.m_max = m_max;
  rep.m_plus = m_plus;
  rep.m_plus_max = m_plus_max;
  rep.opened = m_plus_max + 1;
  rep.runtime_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  return rep;
}

NcReport solve_nc(const Instance& inst) {
  const auto t0 = Clock::now();
  NcReport base = solve_nc_base(inst);
  NcReport mod = solve_nc_modified(inst);
  NcReport& best = mod.drones_used < base.drones_used ? mod : base;
  best.runtime_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  return best;
}

}  // namespace ddp
