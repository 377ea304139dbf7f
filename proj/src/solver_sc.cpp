#include "ddp/solver_sc.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ddp/interval_graph.hpp"
#include "ddp/segmentation.hpp"
#include "ddp/solver_ns.hpp"
#include "fleet.hpp"

namespace ddp {

Rational sc_bound(int opt, int omega, const EpsilonStats& eps) {
  return (Rational(2) + eps.psi) * Rational(opt) + Rational(2 * omega);
}

Rational sc_mod_bound(int opt, const EpsilonStats& eps) { return (Rational(3) + eps.psi) * Rational(opt); }

std::vector<std::pair<int, int>> max_matching(const std::vector<int>& left, const std::vector<int>& right,
                                              const std::vector<std::pair<int, int>>& edges) {
  std::unordered_map<int, std::vector<int>> adj;
  for (const auto& [u, v] : edges) adj[u].push_back(v);
  for (auto& [u, vs] : adj) std::sort(vs.begin(), vs.end());
  std::unordered_map<int, int> owner;  // right id -> left id
  for (int v : right) owner[v] = 0;

  std::set<int> seen;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : adj[u]) {
      if (!seen.insert(v).second) continue;
      if (owner[v] == 0 || augment(owner[v])) {
        owner[v] = u;
        return true;
      }
    }
    return false;
  };
  std::vector<int> order = left;
  std::sort(order.begin(), order.end());
  for (int u : order) {
    seen.clear();
    augment(u);
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, u] : owner)
    if (u) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

BoundaryBipartite build_boundary_bipartite(const std::vector<Delivery>& items, const Station& st, Cost budget) {
  BoundaryBipartite g;
  std::unordered_map<int, const Delivery*> by_id;
  for (const Delivery& d : items) {
    by_id[d.id] = &d;
    if (d.span.contains(st.span.lo))
      g.left.push_back(d.id);
    else if (d.span.contains(st.span.hi))
      g.right.push_back(d.id);
  }
  std::sort(g.left.begin(), g.left.end());
  std::sort(g.right.begin(), g.right.end());
  for (int u : g.left) {
    for (int v : g.right) {
      const Delivery& a = *by_id[u];
      const Delivery& b = *by_id[v];
      if (!conflicts(a.span, b.span) && a.cost + b.cost <= budget) g.edges.emplace_back(u, v);
    }
  }
  g.matching = max_matching(g.left, g.right, g.edges);
  return g;
}

namespace {

using Clock = std::chrono::steady_clock;

bool holds_any(const std::vector<int>& ids, const std::set<int>& wanted) {
  return std::any_of(ids.begin(), ids.end(), [&](int id) { return wanted.count(id) > 0; });
}

int max_or_zero(const std::vector<int>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

ScReport solve_sc_base(const Instance& inst) {
  const auto t0 = Clock::now();
  const int r = inst.r();
  const Segmentation seg = segment(inst);
  ScReport rep;
  rep.variant = Variant::Base;
  rep.omega = max_clique(inst.deliveries).omega;

  std::vector<std::vector<Block>> blocks(static_cast<std::size_t>(r + 2));
  for (int l = 1; l <= r + 1; ++l) {
    blocks[static_cast<std::size_t>(l)] = ns_blocks(pick(inst, seg.seg(l)), inst.budget);
    rep.m.push_back(static_cast<int>(blocks[static_cast<std::size_t>(l)].size()));
  }
  rep.m_max = max_or_zero(rep.m);
  rep.opened = rep.m_max + 2 * rep.omega;

  detail::Fleet fleet(inst);
  // d_last[l + 1] holds the drones of the last set of segment l; l may be -1 or 0.
  std::vector<std::set<int>> d_last(static_cast<std::size_t>(r + 3));
  auto last_at = [&](int l) -> std::set<int>& { return d_last[static_cast<std::size_t>(l + 1)]; };
  std::vector<std::set<int>> used_in(static_cast<std::size_t>(r + 2));

  for (int l = 1; l <= r + 1; ++l) {
    const auto& bl = blocks[static_cast<std::size_t>(l)];
    std::vector<BlockAssignment> rows(bl.size());
    auto& mine = used_in[static_cast<std::size_t>(l)];
    const auto& prev = used_in[static_cast<std::size_t>(l - 1)];
    const auto& first_ids = seg.first_sets[static_cast<std::size_t>(l - 1)];
    const std::set<int> first_set(first_ids.begin(), first_ids.end());
    const auto& last_ids = seg.last_sets[static_cast<std::size_t>(l - 1)];
    const std::set<int> last_set(last_ids.begin(), last_ids.end());

    std::set<int> d_first;
    const std::set<int>& older_last = last_at(l - 2);
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (l < 2 || !holds_any(bl[b].ids, first_set)) continue;
      const int d = fleet.pick(bl[b].ids, [&](int x) { return prev.count(x) || older_last.count(x) || mine.count(x); });
      fleet.assign(d, bl[b].ids);
      mine.insert(d);
      d_first.insert(d);
      rows[b] = {bl[b].ids, d};
    }
    const std::set<int>& prev_last = last_at(l - 1);
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (rows[b].drone) continue;
      const int d = fleet.pick(bl[b].ids, [&](int x) { return prev_last.count(x) || d_first.count(x) || mine.count(x); });
      fleet.assign(d, bl[b].ids);
      mine.insert(d);
      rows[b] = {bl[b].ids, d};
    }
    std::set<int>& cur_last = last_at(l);
    for (const auto& row : rows)
      if (holds_any(row.ids, last_set)) cur_last.insert(row.drone);
    if (l <= r) fleet.service_all(inst.station(l), [&](int x) { return cur_last.count(x) > 0; });
    rep.segments.push_back(std::move(rows));
  }
  rep.schedule = fleet.schedule();
  rep.drones_used = rep.schedule.drone_count();
  rep.runtime_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  return rep;
}

ScReport solve_sc_modified(const Instance& inst) {
  if (!all_swap(inst)) throw std::invalid_argument("solve_sc_modified: requires swap stations only");
  const auto t0 = Clock::now();
  const int r = inst.r();
  const auto tsegs = segment_by_departure(inst);
  ScReport rep;
  rep.variant = Variant::Modified;
  rep.omega = max_clique(inst.deliveries).omega;

  std::vector<std::vector<Block>> blocks(static_cast<std::size_t>(r + 2));
  std::vector<std::set<int>> ext_ids(static_cast<std::size_t>(r + 2));
  for (int l = 1; l <= r + 1; ++l) {
    const std::vector<Delivery> items = pick(inst, tsegs[static_cast<std::size_t>(l - 1)]);
    Coloring col;
    std::vector<std::pair<int, int>> pairs;
    if (l <= r) {
      const BoundaryBipartite g = build_boundary_bipartite(items, inst.station(l), inst.budget);
      std::unordered_map<int, int> seeds;
      int next = 1;
      for (const auto& [u, v] : g.matching) {
        seeds[u] = seeds[v] = next++;
        pairs.emplace_back(u, v);
      }
      for (int u : g.left)
        if (!seeds.count(u)) seeds[u] = next++;
      for (int v : g.right)
        if (!seeds.count(v)) seeds[v] = next++;
      col = color_with_seeds(items, seeds, std::max(rep.omega, g.z()));
      rep.z.push_back(g.z());
      ext_ids[static_cast<std::size_t>(l)].insert(g.left.begin(), g.left.end());
      ext_ids[static_cast<std::size_t>(l)].insert(g.right.begin(), g.right.end());
    } else {
      col = color_min(items);
    }
    std::vector<std::vector<Delivery>> classes(static_cast<std::size_t>(col.color_count));
    for (const Delivery& d : items) classes[static_cast<std::size_t>(col.of(d.id) - 1)].push_back(d);
    auto& out = blocks[static_cast<std::size_t>(l)];
    for (std::size_t k = 0; k < classes.size(); ++k) {
      auto& cls = classes[k];
      std::stable_sort(cls.begin(), cls.end(), [](const Delivery& a, const Delivery& b) {
        if (a.span.lo != b.span.lo) return a.span.lo < b.span.lo;
        return a.id < b.id;
      });
      std::vector<std::pair<int, int>> forced;
      for (const auto& pr : pairs)
        if (col.of(pr.first) == static_cast<int>(k) + 1) forced.push_back(pr);
      Partition p = greedy_pack_seeded(cls, forced, inst.budget);
      for (Block& b : p.blocks) out.push_back(std::move(b));
    }
    rep.m.push_back(static_cast<int>(out.size()));
  }
  rep.m_max = max_or_zero(rep.m);
  rep.z_max = max_or_zero(rep.z);
  rep.opened = rep.m_max + rep.z_max;

  detail::Fleet fleet(inst);
  std::set<int> prev_ext;
  for (int l = 1; l <= r + 1; ++l) {
    const auto& bl = blocks[static_cast<std::size_t>(l)];
    std::vector<BlockAssignment> rows;
    std::set<int> mine;
    std::set<int> ext;
    for (const Block& b : bl) {
      const int d = fleet.pick(b.ids, [&](int x) { return prev_ext.count(x) || mine.count(x); });
      fleet.assign(d, b.ids);
      mine.insert(d);
      rows.push_back({b.ids, d});
      if (holds_any(b.ids, ext_ids[static_cast<std::size_t>(l)])) ext.insert(d);
    }
    if (l <= r) {
      fleet.service_all(inst.station(l), [&](int x) { return ext.count(x) > 0; });
      rep.ext_drones.emplace_back(ext.begin(), ext.end());
    }
    prev_ext = std::move(ext);
    rep.segments.push_back(std::move(rows));
  }
  rep.schedule = fleet.schedule();
  rep.drones_used = rep.schedule.drone_count();
  rep.runtime_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  return rep;
}

}  // namespace ddp
