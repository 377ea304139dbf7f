#include <doctest.h>

#include <regex>
#include <set>

#include "ddp/exact.hpp"
#include "ddp/interval_graph.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace ddp;

TEST_CASE("oracle on the two-station example") {
  const Instance inst = fixtures::section2();
  const OracleResult with = solve_exact(inst);
  CHECK(with.proven);
  CHECK(with.optimum == 4);
  CHECK(validate_schedule(inst, with.schedule).empty());

  const Instance bare = without_stations(inst);
  const OracleResult without = solve_exact(bare);
  CHECK(without.proven);
  CHECK(without.optimum == 6);
  CHECK(validate_schedule(bare, without.schedule).empty());
}

TEST_CASE("oracle trivial cases") {
  const OracleResult one = solve_exact(fixtures::make(10, {{0, 3, 7}}));
  CHECK(one.optimum == 1);
  CHECK(one.proven);
  const OracleResult none = solve_exact(fixtures::make(10, {}));
  CHECK(none.optimum == 0);
}

TEST_CASE("oracle equals set-partition enumeration") {
  support::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    support::Shape shape;
    shape.n = static_cast<int>(rng.range(1, 7));
    shape.r = static_cast<int>(rng.range(0, 3));
    shape.horizon = 24;
    const Instance inst = support::random_instance(rng, shape);
    const OracleResult res = solve_exact(inst);
    REQUIRE(res.proven);
    REQUIRE(validate_schedule(inst, res.schedule).empty());
    REQUIRE(res.optimum == support::brute_optimum(inst));
    REQUIRE(max_clique(inst.deliveries).omega <= res.optimum);
    REQUIRE(exact_lower_bound(inst) <= res.optimum);
  }
}

TEST_CASE("oracle schedules are feasible with charge stations") {
  support::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    support::Shape shape;
    shape.n = static_cast<int>(rng.range(1, 8));
    shape.r = static_cast<int>(rng.range(1, 2));
    shape.mode = StationMode::Charge;
    shape.horizon = 24;
    const Instance inst = support::random_instance(rng, shape);
    const OracleResult res = solve_exact(inst);
    REQUIRE(res.proven);
    REQUIRE(validate_schedule(inst, res.schedule).empty());
    REQUIRE(res.optimum <= solve_exact(without_stations(inst)).optimum);
  }
}

TEST_CASE("swap-when-compatible dominates every service subset") {
  // For a fixed set of deliveries on one drone, the oracle policy (every compatible swap) is
  // feasible exactly when some subset of swaps is.
  support::Rng rng(43);
  int feasible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    support::Shape shape;
    shape.n = static_cast<int>(rng.range(1, 6));
    shape.r = static_cast<int>(rng.range(1, 3));
    shape.horizon = 30;
    shape.conflict_free = true;
    const Instance inst = support::random_instance(rng, shape);
    std::vector<int> ids;
    for (const Delivery& d : inst.deliveries) ids.push_back(d.id);
    const bool by_subsets = support::feasible_by_subsets(inst, ids);
    const bool by_policy = solve_exact(inst).optimum == 1;
    REQUIRE(by_subsets == by_policy);
    feasible += by_policy;
  }
  CHECK(feasible > 100);
}

TEST_CASE("adding a station never raises the optimum") {
  support::Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    support::Shape shape;
    shape.n = static_cast<int>(rng.range(1, 8));
    shape.r = 2;
    shape.horizon = 30;
    const Instance inst = support::random_instance(rng, shape);
    Instance fewer = inst;
    fewer.stations.erase(fewer.stations.begin() + static_cast<long>(rng.range(0, 1)));
    fewer.stations[0].id = 1;
    REQUIRE(solve_exact(inst).optimum <= solve_exact(fewer).optimum);
  }
}

TEST_CASE("node limit stops the search") {
  support::Rng rng(45);
  support::Shape shape;
  shape.n = 14;
  shape.r = 1;
  shape.horizon = 30;
  const Instance inst = support::random_instance(rng, shape);
  const OracleResult res = solve_exact(inst, {1, 0});
  CHECK(validate_schedule(inst, res.schedule).empty());
  CHECK(res.optimum >= res.lower_bound);
}

TEST_CASE("lp export structure") {
  const Instance two = fixtures::make(10, {{0, 2, 4}, {1, 3, 5}});
  const std::string lp = export_lp(two);
  const auto count = [&](const std::string& pattern) {
    const std::regex re(pattern);
    return std::distance(std::sregex_iterator(lp.begin(), lp.end(), re), std::sregex_iterator());
  };
  CHECK(lp.find("Minimize") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);
  CHECK(count(R"(\bx_\d+_\d+\b)") > 0);
  CHECK(count(R"( K_\d+:)") == 2);
  CHECK(count(R"( C3_1_1_2: x_1_1 \+ x_1_2 <= 1)") == 1);
  CHECK(count(R"( C3_2_1_2: x_2_1 \+ x_2_2 <= 1)") == 1);
  CHECK(count(R"(u_\d)") == 0);
  std::set<std::string> xs;
  const std::regex xre(R"(x_\d+_\d+)");
  for (auto it = std::sregex_iterator(lp.begin(), lp.end(), xre); it != std::sregex_iterator(); ++it) xs.insert(it->str());
  CHECK(xs.size() == 4);

  const std::string sec2 = export_lp(fixtures::section2());
  for (int c = 1; c <= 11; ++c) {
    if (c == 4) continue;
    CHECK(sec2.find(" C" + std::to_string(c) + "_") != std::string::npos);
  }
  CHECK(sec2.find("\\ C4") != std::string::npos);
  CHECK(sec2.find("\\ C12") != std::string::npos);
  CHECK(sec2.find(" 100000 x_") != std::string::npos);  // big-M = 10 * budget

  Instance charge = fixtures::section2();
  charge.stations[0].mode = StationMode::Charge;
  CHECK_THROWS_AS(export_lp(charge), std::invalid_argument);
}

TEST_CASE("lp export drops stations ahead of the first delivery") {
  const Instance inst = fixtures::make(10, {{10, 12, 4}}, {{0, 3}});
  const std::string lp = export_lp(inst);
  CHECK(lp.find("slot order: d1\n") != std::string::npos);
}
