#include <doctest.h>

#include "ddp/packing.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace ddp;

namespace {

std::vector<Delivery> chain(std::initializer_list<Cost> costs) {
  std::vector<Delivery> out;
  int id = 0;
  for (Cost c : costs) {
    ++id;
    out.push_back({id, {id * 10, id * 10 + 5}, c});
  }
  return out;
}

std::vector<std::vector<int>> ids_of(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (const Block& b : p.blocks) out.push_back(b.ids);
  return out;
}

}  // namespace

TEST_CASE("best-fit examples") {
  const Partition p = greedy_pack(chain({6, 5, 4, 5}), 10);
  CHECK(ids_of(p) == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  const auto items = chain({6, 8, 4, 9, 5, 7, 5, 6});
  const Partition q = greedy_pack(items, 10);
  CHECK(q.m() == 6);
  // The volume bound is ceil(50/10) = 5, but 9, 8 and 7 pair with nothing, so 6 is optimal.
  CHECK(support::optimal_bins(support::costs_of(items), 10).size() == 6);

  CHECK(greedy_pack(chain({7}), 10).m() == 1);
  CHECK_THROWS_AS(greedy_pack(chain({11}), 10), std::invalid_argument);
}

TEST_CASE("descend-right mode yields a valid partition") {
  support::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto items = support::random_compatible(rng, static_cast<int>(rng.range(1, 30)), 10);
    const Partition p = greedy_pack(items, 10, FitRule::DescendRight);
    REQUIRE(support::same_partition_cover(p, items));
    for (const Block& b : p.blocks) REQUIRE(b.total <= 10);
    int light = 0;
    for (const Block& b : p.blocks) light += 2 * b.total < 10;
    REQUIRE(light <= 1);
  }
}

TEST_CASE("ffd examples") {
  const Partition p = ffd(chain({3, 5, 9, 2, 3, 3}), 10);
  CHECK(ids_of(p) == std::vector<std::vector<int>>{{3}, {2, 1, 4}, {5, 6}});
  CHECK(ffd(chain({7, 10}), 10).m() == 2);
  CHECK(ffd(chain({6, 6, 6}), 10).m() == 3);
  CHECK_THROWS_AS(ffd(chain({12}), 10), std::invalid_argument);
}

TEST_CASE("ffd breaks cost ties by launch time") {
  std::vector<Delivery> items{{1, {50, 51}, 4}, {2, {10, 11}, 4}, {3, {30, 31}, 7}};
  const Partition p = ffd(items, 10);
  CHECK(ids_of(p) == std::vector<std::vector<int>>{{3}, {2, 1}});
}

TEST_CASE("seeded packing") {
  const auto items = chain({4, 5, 9});
  CHECK(ids_of(greedy_pack_seeded(items, {{1, 2}}, 10)) == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(ids_of(greedy_pack_seeded(items, {}, 10)) == ids_of(greedy_pack(items, 10)));
  CHECK_THROWS_AS(greedy_pack_seeded(items, {{2, 3}}, 10), std::invalid_argument);
  CHECK_THROWS_AS(greedy_pack_seeded(items, {{1, 9}}, 10), std::invalid_argument);
  // Conflicting pair.
  std::vector<Delivery> clash{{1, {0, 5}, 2}, {2, {5, 9}, 2}};
  CHECK_THROWS_AS(greedy_pack_seeded(clash, {{1, 2}}, 10), std::invalid_argument);
}

TEST_CASE("greedy packing respects capacity and block_of") {
  support::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto items = support::random_compatible(rng, static_cast<int>(rng.range(1, 25)), 10);
    const Partition p = greedy_pack(items, 10);
    REQUIRE(support::same_partition_cover(p, items));
    for (int b = 0; b < p.m(); ++b) {
      Cost total = 0;
      for (int id : p.blocks[static_cast<std::size_t>(b)].ids) {
        total += items[static_cast<std::size_t>(id - 1)].cost;
        REQUIRE(p.block_of(id) == b);
      }
      REQUIRE(total == p.blocks[static_cast<std::size_t>(b)].total);
      REQUIRE(total <= 10);
    }
    CHECK(p.block_of(1000) == -1);
  }
}
