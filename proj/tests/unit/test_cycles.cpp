#include <doctest.h>

#include "core/cycles.hpp"
#include "core/generators.hpp"
#include "helpers.hpp"

using namespace sclq;

TEST_CASE("cycle search on named graphs") {
  const auto hex = find_cycle_of_length(cycle_graph(6), 6);
  REQUIRE(hex.has_value());
  CHECK(hex->vertices.size() == 6);
  CHECK(is_valid_cycle(cycle_graph(6), *hex));
  CHECK_FALSE(find_cycle_of_length(cycle_graph(6), 4).has_value());
  CHECK_FALSE(find_cycle_of_length(complete_bipartite(3, 3), 5).has_value());
  CHECK(find_cycle_of_length(complete_bipartite(3, 3), 6).has_value());
  CHECK_FALSE(find_cycle_of_length(petersen_graph(), 3).has_value());
  CHECK_FALSE(find_cycle_of_length(petersen_graph(), 4).has_value());
  CHECK(find_cycle_of_length(petersen_graph(), 5).has_value());
  const auto petersen = testing::plain(petersen_graph());
  for (std::size_t len = 6; len <= 10; ++len) {
    CHECK(find_cycle_of_length(petersen_graph(), len).has_value() == oracle::has_cycle(petersen, static_cast<int>(len)));
  }
  CHECK_FALSE(find_cycle_of_length(petersen_graph(), 10).has_value());
  CHECK_THROWS_AS(find_cycle_of_length(cycle_graph(5), 2), Error);
  CHECK_FALSE(find_cycle_of_length(cycle_graph(5), 9).has_value());
}

TEST_CASE("cycle validity rejects bad witnesses") {
  const Graph c = cycle_graph(5);
  CHECK(is_valid_cycle(c, CycleWitness{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_valid_cycle(c, CycleWitness{{0, 1, 2}}));
  CHECK_FALSE(is_valid_cycle(c, CycleWitness{{0, 1, 0, 1}}));
  CHECK_FALSE(is_valid_cycle(c, CycleWitness{{0, 1, 2, 3, 9}}));
}

TEST_CASE("cycle search matches the permutation oracle on all graphs n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    GraphEnumerator en(n, false);
    while (auto g = en.next()) {
      const auto p = testing::plain(*g);
      for (int len = 3; len <= n; ++len) {
        const auto found = find_cycle_of_length(*g, static_cast<std::size_t>(len));
        REQUIRE(found.has_value() == oracle::has_cycle(p, len));
        if (found) REQUIRE(is_valid_cycle(*g, *found));
      }
    }
  }
}

TEST_CASE("cycle search matches the oracle on sampled graphs n = 7, 8") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 7 + static_cast<int>(seed % 2);
    const Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 4), seed);
    const auto p = testing::plain(g);
    for (int len = 3; len <= n; ++len) {
      REQUIRE(find_cycle_of_length(g, static_cast<std::size_t>(len)).has_value() == oracle::has_cycle(p, len));
    }
  }
}

TEST_CASE("freeness and girth") {
  const Graph p = petersen_graph();
  const std::vector<std::size_t> lens{3, 4, 5};
  const auto r = check_free(p, lens);
  CHECK_FALSE(r.free);
  CHECK(*r.length == 5);
  CHECK(is_valid_cycle(p, *r.witness));
  CHECK(check_free(p, std::vector<std::size_t>{3, 4}).free);
  CHECK(*girth(p) == 5);
  CHECK(*girth(complete_bipartite(2, 3)) == 4);
  CHECK_FALSE(girth(path_graph(6)).has_value());
}
