#include "ddp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ddp/interval_graph.hpp"
#include "ddp/solver_nc.hpp"
#include "ddp/solver_ns.hpp"
#include "ddp/solver_sc.hpp"

namespace ddp {

std::string to_string(LengthDist dist) { return dist == LengthDist::Exponential ? "exp" : "uniform"; }

LengthDist parse_dist(const std::string& s) {
  if (s == "exp" || s == "exponential") return LengthDist::Exponential;
  if (s == "uniform") return LengthDist::Uniform;
  throw std::invalid_argument("unknown length distribution: " + s);
}

namespace {

// Draw categories; each gets its own engine so changing one does not shift the others.
enum Stream : std::uint32_t { kArrivals = 1, kLengths = 2, kStations = 3 };

// Distributions are computed by hand from raw engine output: the standard library's
// distribution objects are not specified bit-for-bit across implementations.
class Draws {
 public:
  Draws(std::uint64_t seed, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    engine_.seed(seq);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double exponential(double mean) { return -mean * std::log1p(-unit()); }
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr int kMaxRedraws = 1000;

struct Raw {
  std::int64_t lo;
  std::int64_t hi;
};

bool fits_stations(const Raw& d, const std::vector<Raw>& stations) {
  int touched = 0;
  for (const Raw& s : stations) {
    if (s.lo <= d.lo && d.hi <= s.hi) return false;
    if (d.lo <= s.hi && s.lo <= d.hi) ++touched;
  }
  return touched <= 1;
}

std::vector<Raw> place_stations(const GenConfig& cfg) {
  Draws draws(cfg.seed, kStations);
  std::vector<Raw> out;
  for (int l = 1; l <= cfg.r; ++l) {
    const double centre = cfg.horizon * (l - 0.5) / cfg.r;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxRedraws) throw std::invalid_argument("generate: cannot place disjoint stations");
      const std::int64_t lo = static_cast<std::int64_t>(std::floor(centre)) + draws.uniform_int(-1, 1) - cfg.swap_len / 2;
      const Raw s{lo, lo + cfg.swap_len};
      if (s.lo < 0) continue;
      if (!out.empty() && s.lo <= out.back().hi) continue;
      out.push_back(s);
      break;
    }
  }
  return out;
}

std::int64_t draw_length(const GenConfig& cfg, Draws& draws) {
  if (cfg.dist == LengthDist::Uniform) return std::min<std::int64_t>(draws.uniform_int(1, 10), cfg.budget);
  const auto len = static_cast<std::int64_t>(std::ceil(draws.exponential(cfg.budget / 2.0)));
  return std::clamp<std::int64_t>(len, 1, cfg.budget);
}

}  // namespace

Instance generate(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.budget <= 0 || cfg.r < 0 || cfg.horizon <= 1 || cfg.swap_len <= 0)
    throw std::invalid_argument("generate: bad configuration");
  const std::vector<Raw> stations = place_stations(cfg);
  Draws arrivals(cfg.seed, kArrivals);
  Draws lengths(cfg.seed, kLengths);
  const double mean_gap = static_cast<double>(cfg.horizon) / std::max(cfg.n, 1);

  std::vector<Raw> deliveries;
  if (cfg.conflict_free) {
    std::int64_t prev_end = -1;
    for (int j = 0; j < cfg.n; ++j) {
      int attempt = 0;
      for (;; ++attempt) {
        if (attempt == kMaxRedraws) throw std::invalid_argument("generate: delivery redraw limit reached");
        const std::int64_t lo = prev_end + 1 + static_cast<std::int64_t>(std::floor(arrivals.exponential(mean_gap)));
        const Raw d{lo, lo + draw_length(cfg, lengths)};
        if (!fits_stations(d, stations)) continue;
        deliveries.push_back(d);
        prev_end = d.hi;
        break;
      }
    }
  } else {
    std::vector<double> cumulative;
    double t = 0;
    for (int j = 0; j < cfg.n; ++j) cumulative.push_back(t += arrivals.exponential(mean_gap));
    for (int j = 0; j < cfg.n; ++j) {
      const auto lo = static_cast<std::int64_t>(std::llround(cumulative[static_cast<std::size_t>(j)] / t * (cfg.horizon - 1)));
      int attempt = 0;
      for (;; ++attempt) {
        if (attempt == kMaxRedraws) throw std::invalid_argument("generate: delivery redraw limit reached");
        const Raw d{lo, lo + draw_length(cfg, lengths)};
        if (!fits_stations(d, stations)) continue;
        deliveries.push_back(d);
        break;
      }
    }
  }

  Instance inst;
  inst.budget = cfg.budget * kScale;
  for (std::size_t j = 0; j < deliveries.size(); ++j) {
    const Raw& d = deliveries[j];
    inst.deliveries.push_back({static_cast<int>(j + 1), {d.lo * kScale, d.hi * kScale}, (d.hi - d.lo) * kScale});
  }
  for (std::size_t l = 0; l < stations.size(); ++l)
    inst.stations.push_back({static_cast<int>(l + 1), {stations[l].lo * kScale, stations[l].hi * kScale}, cfg.mode, {}});
  return inst;
}

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names{"ns", "nc", "nc-mod", "sc", "sc-mod"};
  return names;
}

SolveOutcome run_solver(const std::string& name, const Instance& inst) {
  auto pack = [](const auto& rep) { return SolveOutcome{rep.schedule, rep.drones_used, rep.runtime_us}; };
  if (name == "ns") return pack(solve_ns(inst));
  if (name == "nc") return pack(solve_nc_base(inst));
  if (name == "nc-mod") return pack(solve_nc(inst));
  if (name == "sc") return pack(solve_sc_base(inst));
  if (name == "sc-mod") return pack(solve_sc_modified(inst));
  throw std::invalid_argument("unknown solver: " + name);
}

bool bound_holds(const std::string& name, const Instance& inst, int drones, int opt) {
  const EpsilonStats eps = epsilon_stats(inst);
  const int omega = max_clique(inst.deliveries).omega;
  if (omega > opt) return false;
  const Rational count(drones);
  if (name == "ns") return count <= ns_bound(opt, omega, eps);
  if (name == "nc" || name == "nc-mod") return count <= nc_bound(opt);
  if (name == "sc") return count <= sc_bound(opt, omega, eps);
  if (name == "sc-mod") return count <= sc_mod_bound(opt, eps);
  throw std::invalid_argument("unknown solver: " + name);
}

int bench_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DDP_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) n = n > 0 ? std::min(n, cap) : cap;
    }
  }
  return std::max(n, 1);
}

std::vector<BenchRow> run_bench(const std::vector<GenConfig>& cfgs, const std::vector<std::string>& solvers,
                                const BenchOptions& opts) {
  struct Task {
    GenConfig cfg;
    std::vector<BenchRow> rows;
  };
  std::vector<Task> tasks;
  for (const GenConfig& cfg : cfgs)
    for (int k = 0; k < opts.repeats; ++k) {
      Task t;
      t.cfg = cfg;
      t.cfg.seed = cfg.seed + static_cast<std::uint64_t>(k);
      tasks.push_back(std::move(t));
    }
  if (solvers.empty()) return {};

  auto work = [&](Task& task) {
    Instance inst;
    try {
      inst = generate(task.cfg);
    } catch (const std::invalid_argument&) {
      for (const std::string& name : solvers) {
        BenchRow row;
        row.cfg = task.cfg;
        row.solver = name;
        row.note = "generation-failed";
        task.rows.push_back(std::move(row));
      }
      return;
    }
    const int omega = max_clique(inst.deliveries).omega;
    std::optional<int> opt;
    bool oracle_limit = false;
    if (opts.oracle) {
      const OracleResult res = solve_exact(inst, opts.limits);
      if (res.proven)
        opt = res.optimum;
      else
        oracle_limit = true;
    }
    for (const std::string& name : solvers) {
      BenchRow row;
      row.cfg = task.cfg;
      row.solver = name;
      row.omega = omega;
      row.opt = opt;
      if (oracle_limit) row.note = "oracle-limit";
      try {
        const SolveOutcome out = run_solver(name, inst);
        row.drones = out.drones;
        row.runtime_us = out.runtime_us;
        row.valid = validate_schedule(inst, out.schedule).empty();
        if (opt) row.bound_ok = bound_holds(name, inst, out.drones, *opt);
      } catch (const std::invalid_argument&) {
        row.note = "unsupported";
      }
      task.rows.push_back(std::move(row));
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) work(tasks[i]);
  };
  const int threads = std::min<int>(bench_threads(opts.threads), static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<BenchRow> rows;
  for (Task& t : tasks)
    for (BenchRow& r : t.rows) rows.push_back(std::move(r));
  return rows;
}

std::string csv_header() { return "seed,n,B,r,dist,solver,drones,omega,opt,runtime_us,bound_ok\n"; }

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << csv_header();
  for (const BenchRow& r : rows) {
    out << r.cfg.seed << ',' << r.cfg.n << ',' << r.cfg.budget << ',' << r.cfg.r << ',' << to_string(r.cfg.dist) << ','
        << r.solver << ',';
    if (r.drones >= 0) out << r.drones;
    out << ',' << r.omega << ',';
    if (r.opt) out << *r.opt;
    out << ',' << static_cast<long long>(std::llround(r.runtime_us)) << ',';
    if (r.bound_ok) out << (*r.bound_ok && r.valid ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

}  // namespace ddp
