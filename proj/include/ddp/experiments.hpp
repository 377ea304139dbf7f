#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddp/exact.hpp"
#include "ddp/model.hpp"

namespace ddp {

enum class LengthDist { Exponential, Uniform };

std::string to_string(LengthDist dist);
LengthDist parse_dist(const std::string& s);

// Parameters are in model units; the generated instance is scaled by kScale.
struct GenConfig {
  int n = 20;
  int budget = 50;
  int r = 0;
  LengthDist dist = LengthDist::Exponential;  // exponential mean budget/2, or uniform on 1..10
  int horizon = 300;
  int swap_len = 5;
  StationMode mode = StationMode::Swap;
  std::uint64_t seed = 1;
  bool conflict_free = false;  // sequential launches with gaps, for the NC solvers
};

// Deterministic in cfg. Throws std::invalid_argument if stations cannot be placed or a delivery
// cannot be redrawn into a valid position within 1000 attempts.
Instance generate(const GenConfig& cfg);

// Solver names: ns, nc, nc-mod, sc, sc-mod.
const std::vector<std::string>& solver_names();

struct SolveOutcome {
  Schedule schedule;
  int drones = 0;
  double runtime_us = 0;
};

// Runs a named solver. nc is the base NC algorithm; nc-mod runs both NC variants and keeps the
// better. Throws std::invalid_argument for unknown names or unsupported instances.
SolveOutcome run_solver(const std::string& name, const Instance& inst);

// True when the solver's count satisfies its guarantee relative to `opt`.
bool bound_holds(const std::string& name, const Instance& inst, int drones, int opt);

struct BenchRow {
  GenConfig cfg;
  std::string solver;
  int drones = -1;  // -1 when the solver rejected the instance
  int omega = 0;
  std::optional<int> opt;  // proven optimum
  double runtime_us = 0;
  bool valid = true;             // schedule passed validation
  std::optional<bool> bound_ok;  // set when opt is known
  std::string note;              // "unsupported", "oracle-limit", or empty
};

struct BenchOptions {
  int repeats = 5;
  bool oracle = false;
  OracleLimits limits;
  int threads = 0;  // 0: DDP_THREADS or hardware concurrency
};

// For each config and repeat k, generates with seed cfg.seed + k and runs every solver.
// Rows are ordered by config, repeat, then solver list order.
std::vector<BenchRow> run_bench(const std::vector<GenConfig>& cfgs, const std::vector<std::string>& solvers,
                                const BenchOptions& opts = {});

std::string csv_header();
std::string to_csv(const std::vector<BenchRow>& rows);

int bench_threads(int requested);

}  // namespace ddp
