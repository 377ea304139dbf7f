#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddp/exact.hpp"
#include "ddp/experiments.hpp"
#include "ddp/json_io.hpp"
#include "ddp/model.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ddp::Instance read_instance(const std::string& path) {
  ddp::Instance inst;
  try {
    inst = ddp::load_instance(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return inst;
}

bool report_instance(const ddp::Instance& inst) {
  const auto issues = ddp::validate_instance(inst);
  for (const auto& v : issues) std::cerr << "instance: " << ddp::describe(v) << '\n';
  return issues.empty();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

ddp::StationMode parse_mode(const std::string& s) {
  if (s == "swap") return ddp::StationMode::Swap;
  if (s == "charge") return ddp::StationMode::Charge;
  throw UsageError("unknown station mode: " + s);
}

ddp::GenConfig config_from_json(const nlohmann::json& j) {
  ddp::GenConfig c;
  c.n = j.value("n", c.n);
  c.budget = j.value("budget", c.budget);
  c.r = j.value("stations", j.value("r", c.r));
  c.dist = ddp::parse_dist(j.value("dist", std::string("exp")));
  c.horizon = j.value("horizon", c.horizon);
  c.swap_len = j.value("swap_len", c.swap_len);
  c.mode = parse_mode(j.value("mode", std::string("swap")));
  c.seed = j.value("seed", c.seed);
  c.conflict_free = j.value("conflict_free", c.conflict_free);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drone delivery packing toolkit"};
  app.require_subcommand(1);

  ddp::GenConfig gen;
  std::string dist = "exp";
  std::string mode = "swap";
  std::string out_path;
  std::string in_path;
  std::string sched_path;
  std::string algo;
  std::string config_path;
  std::uint64_t nodes = ddp::OracleLimits{}.max_nodes;
  double time_ms = 0;

  auto* generate = app.add_subcommand("generate", "Generate a random instance");
  generate->add_option("--n", gen.n, "Number of deliveries")->required();
  generate->add_option("--budget", gen.budget, "Battery budget in model units")->required();
  generate->add_option("--stations", gen.r, "Number of stations");
  generate->add_option("--dist", dist, "Length distribution: exp or uniform");
  generate->add_option("--seed", gen.seed, "RNG seed")->required();
  generate->add_option("--mode", mode, "Station mode: swap or charge");
  generate->add_option("--horizon", gen.horizon, "Time horizon in model units");
  generate->add_flag("--conflict-free", gen.conflict_free, "Generate non-overlapping deliveries");
  generate->add_option("-o,--output", out_path, "Instance JSON path")->required();

  auto* solve = app.add_subcommand("solve", "Run an approximation solver");
  solve->add_option("--algo", algo, "ns, nc, nc-mod, sc or sc-mod")
      ->required()
      ->check(CLI::IsMember(ddp::solver_names()));
  solve->add_option("-i,--input", in_path, "Instance JSON path")->required();
  solve->add_option("-o,--output", out_path, "Schedule JSON path");

  auto* validate = app.add_subcommand("validate", "Check a schedule against an instance");
  validate->add_option("-i,--input", in_path, "Instance JSON path")->required();
  validate->add_option("-s,--schedule", sched_path, "Schedule JSON path")->required();

  auto* exact = app.add_subcommand("exact", "Solve to optimality by branch and bound");
  exact->add_option("-i,--input", in_path, "Instance JSON path")->required();
  exact->add_option("--nodes", nodes, "Node limit");
  exact->add_option("--time-ms", time_ms, "Time limit in milliseconds (0: none)");
  exact->add_option("-o,--output", out_path, "Schedule JSON path");

  auto* export_lp = app.add_subcommand("export-lp", "Write the integer program in LP format");
  export_lp->add_option("-i,--input", in_path, "Instance JSON path")->required();
  export_lp->add_option("-o,--output", out_path, "LP file path")->required();

  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  bench->add_option("--config", config_path, "Bench JSON path")->required();
  bench->add_option("-o,--output", out_path, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) {
      gen.dist = ddp::parse_dist(dist);
      gen.mode = parse_mode(mode);
      const ddp::Instance inst = ddp::generate(gen);
      ddp::save_json(ddp::to_json(inst), out_path);
      std::cout << inst.n() << " deliveries, " << inst.r() << " stations\n";
      return kOk;
    }

    if (*solve) {
      const ddp::Instance inst = read_instance(in_path);
      if (!report_instance(inst)) return kInfeasible;
      ddp::SolveOutcome out;
      try {
        out = ddp::run_solver(algo, inst);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!out_path.empty()) ddp::save_json(ddp::to_json(out.schedule), out_path);
      std::cout << out.drones << '\n';
      const auto issues = ddp::validate_schedule(inst, out.schedule);
      for (const auto& v : issues) std::cerr << "schedule: " << ddp::describe(v) << '\n';
      return issues.empty() ? kOk : kInfeasible;
    }

    if (*validate) {
      const ddp::Instance inst = read_instance(in_path);
      if (!report_instance(inst)) return kInfeasible;
      ddp::Schedule sched;
      try {
        sched = ddp::load_schedule(sched_path);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const auto issues = ddp::validate_schedule(inst, sched);
      for (const auto& v : issues) std::cout << ddp::describe(v) << '\n';
      if (!issues.empty()) return kInfeasible;
      std::cout << "feasible, " << sched.drone_count() << " drones\n";
      return kOk;
    }

    if (*exact) {
      const ddp::Instance inst = read_instance(in_path);
      if (!report_instance(inst)) return kInfeasible;
      const ddp::OracleResult res = ddp::solve_exact(inst, {nodes, time_ms});
      if (!out_path.empty()) ddp::save_json(ddp::to_json(res.schedule), out_path);
      std::cout << res.optimum << " proven=" << (res.proven ? "true" : "false") << " nodes=" << res.nodes << '\n';
      return res.proven ? kOk : kLimit;
    }

    if (*export_lp) {
      const ddp::Instance inst = read_instance(in_path);
      if (!report_instance(inst)) return kInfeasible;
      std::string text;
      try {
        text = ddp::export_lp(inst);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_text(out_path, text);
      return kOk;
    }

    if (*bench) {
      nlohmann::json doc;
      try {
        std::ifstream in(config_path);
        if (!in) throw UsageError("cannot read " + config_path);
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(e.what());
      }
      std::vector<ddp::GenConfig> cfgs;
      std::vector<std::string> solvers;
      ddp::BenchOptions opts;
      try {
        for (const auto& c : doc.at("configs")) cfgs.push_back(config_from_json(c));
        solvers = doc.value("solvers", ddp::solver_names());
        opts.repeats = doc.value("repeats", opts.repeats);
        opts.oracle = doc.value("oracle", opts.oracle);
        opts.limits.max_nodes = doc.value("nodes", opts.limits.max_nodes);
        opts.limits.max_ms = doc.value("time_ms", opts.limits.max_ms);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      for (const auto& s : solvers)
        if (std::find(ddp::solver_names().begin(), ddp::solver_names().end(), s) == ddp::solver_names().end())
          throw UsageError("unknown solver: " + s);
      const auto rows = ddp::run_bench(cfgs, solvers, opts);
      write_text(out_path, ddp::to_csv(rows));
      int bad = 0;
      int limited = 0;
      for (const auto& r : rows) {
        if (!r.valid || (r.bound_ok && !*r.bound_ok)) ++bad;
        if (r.note == "oracle-limit") ++limited;
      }
      std::cout << rows.size() << " rows, " << bad << " violations, " << limited << " oracle-limited\n";
      return bad ? kInfeasible : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
