#include <doctest.h>

#include <random>

#include "core/generators.hpp"
#include "core/witness.hpp"
#include "helpers.hpp"

using namespace sclq;

namespace {

SemiCompleteDigraph random_semicomplete(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SemiCompleteDigraph d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (rng() % 3) {
        case 0: d.add_arc(i, j); break;
        case 1: d.add_arc(j, i); break;
        default: d.add_arc(i, j); d.add_arc(j, i);
      }
    }
  }
  return d;
}

bool contains_matching(const PathWitness& p, const Matching& m) {
  for (EdgeId e : m.edges()) {
    if (std::find(p.edges.begin(), p.edges.end(), e) == p.edges.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("semicomplete Hamiltonian path and component order") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_semicomplete(1 + seed % 9, seed);
    REQUIRE(d.is_semicomplete());
    const auto path = semicomplete_hamiltonian_path(d);
    REQUIRE(path.size() == d.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(d.has_arc(path[i], path[i + 1]));
    const auto comps = d.ordered_components();
    std::vector<std::size_t> where(d.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (std::size_t v : comps[c]) where[v] = c;
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b)
        if (d.has_arc(a, b) && where[a] != where[b]) CHECK(where[a] < where[b]);
    CHECK((comps.size() == 1) == d.is_strongly_connected());
  }
  SemiCompleteDigraph broken(3);
  broken.add_arc(0, 1);
  CHECK_FALSE(broken.is_semicomplete());
  CHECK_THROWS_AS(semicomplete_hamiltonian_path(broken), Error);
}

TEST_CASE("auxiliary digraph rejects matchings that are not strong cliques") {
  const Graph c8 = cycle_graph(8);
  const Matching far = Matching::from_edges(c8, {0, 4});
  CHECK_THROWS_WITH_AS(lemma21_path(c8, far), doctest::Contains("distance > 2"), Error);
  const Graph c5 = cycle_graph(5);
  CHECK_THROWS_WITH_AS(lemma21_path(c5, Matching::from_edges(c5, {0, 2})), doctest::Contains("not bipartite"), Error);
  CHECK_THROWS_AS(lemma21_path(c8, Matching()), Error);
}

TEST_CASE("matching path on a complete bipartite graph") {
  const Graph g = complete_bipartite(4, 4);
  const Matching m = maximum_matching(g);
  const PathWitness p = lemma21_path(g, m);
  CHECK(p.vertices.size() == 8);
  CHECK(is_valid_path(g, p));
  CHECK(contains_matching(p, m));
}

TEST_CASE("matching cycle needs m >= 4") {
  const Graph g = complete_bipartite(3, 3);
  CHECK_THROWS_WITH_AS(lemma21_cycle(g, maximum_matching(g)), doctest::Contains("at least 4"), Error);
  const Graph k = complete_bipartite(5, 5);
  const Matching m = maximum_matching(k);
  const auto c = lemma21_cycle(k, m);
  CHECK(c.cycle.vertices.size() == 8);
  CHECK(is_valid_cycle(k, c.cycle));
  CHECK(c.matching_edges_used >= 3);
}

TEST_CASE("matching path and cycle on random bipartite graphs") {
  std::size_t with_cycle = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = random_bipartite(2 + static_cast<int>(seed % 5), 2 + static_cast<int>(seed / 5 % 5), 0.6, seed);
    if (g.edge_count() == 0) continue;
    const Matching m = testing::clique_matching(g);
    const PathWitness p = lemma21_path(g, m);
    REQUIRE(p.vertices.size() == 2 * m.size());
    REQUIRE(is_valid_path(g, p));
    REQUIRE(contains_matching(p, m));
    for (Vertex v : p.vertices) REQUIRE(m.covers(v));
    if (m.size() >= 4) {
      ++with_cycle;
      const auto c = lemma21_cycle(g, m);
      REQUIRE(c.cycle.vertices.size() == 2 * m.size() - 2);
      REQUIRE(is_valid_cycle(g, c.cycle));
      REQUIRE(c.matching_edges_used + 2 >= m.size());
      for (Vertex v : c.cycle.vertices) REQUIRE(m.covers(v));
    }
  }
  CHECK(with_cycle > 0);
}

TEST_CASE("s-minimal reduction keeps S and drops the rest") {
  // C5 with a pendant path hanging off vertex 0.
  const Graph g = testing::graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
  const std::vector<EdgeId> s{0, 1, 2, 3, 4};
  const auto red = s_minimal_reduce(g, s);
  CHECK(red.reduced.graph.vertex_count() == 5);
  CHECK(red.reduced.graph.edge_count() == 5);
  CHECK(red.s_edges.size() == 5);
  CHECK(check_minimal_properties(red.reduced.graph, red.s_edges, true).all_pass());
  CHECK_THROWS_AS(s_minimal_reduce(cycle_graph(6), std::vector<EdgeId>{0, 3}), Error);
}

TEST_CASE("S-minimal graphs satisfy the four structural properties") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_graph(6 + static_cast<int>(seed % 4), 0.4, seed);
    if (g.edge_count() == 0) continue;
    const auto sc = strong_clique_number(g);
    const auto red = s_minimal_reduce(g, sc.witness);
    const Graph& h = red.reduced.graph;
    REQUIRE(is_strong_clique(h, red.s_edges));
    REQUIRE(red.s_edges.size() == sc.size);
    const auto report = check_minimal_properties(h, red.s_edges, true);
    INFO("seed " << seed);
    CHECK(report.covers_vertices.pass);
    CHECK(report.diameter_at_most_three.pass);
    CHECK(report.unique_link.pass);
    CHECK(report.far_edge.evaluated);
    CHECK(report.far_edge.pass);
  }
}

TEST_CASE("properties flag a graph that is not S-minimal") {
  const Graph p = path_graph(4);
  const std::vector<EdgeId> s{0};
  const auto report = check_minimal_properties(p, s, false);
  CHECK_FALSE(report.covers_vertices.pass);
  CHECK_FALSE(report.far_edge.evaluated);
}

TEST_CASE("special matchings") {
  for (int m = 1; m <= 6; ++m) {
    const Graph g = special_matching_graph(m);
    std::vector<EdgeId> ids(static_cast<std::size_t>(m));
    std::iota(ids.begin(), ids.end(), 0);
    const Matching mm = Matching::from_edges(g, ids);
    CHECK(is_x_special(g, mm, 0));
    CHECK(is_special(g, mm));
  }
  const Graph g = special_matching_graph(4);
  const Matching mm = Matching::from_edges(g, {0, 1, 2, 3});
  CHECK_FALSE(is_x_special(g, mm, 1));
  CHECK_FALSE(is_x_special(g, mm, 2));
  CHECK_THROWS_AS(is_x_special(path_graph(3), Matching::from_edges(path_graph(3), {0}), 2), Error);
}

TEST_CASE("xm-path search basics") {
  const Graph g = special_matching_graph(4);
  const Matching m = Matching::from_edges(g, {0, 1, 2, 3});
  CHECK_FALSE(find_xm_path(g, m, 0, 2).has_value());
  const auto p3 = find_xm_path(g, m, 0, 3);
  REQUIRE(p3.has_value());
  CHECK(is_valid_xm_path(g, m, 0, *p3));
  CHECK(p3->edges.size() == 3);
  CHECK_FALSE(find_xm_path(g, m, 0, 8).has_value());
  CHECK_THROWS_AS(find_xm_path(g, m, 0, 0), Error);
  const Graph bigger = testing::graph(9, {{0, 1}, {2, 3}, {0, 2}, {4, 8}});
  const Matching mb = Matching::from_edges(bigger, {0, 1});
  CHECK_THROWS_AS(find_xm_path(bigger, mb, 8, 1), Error);
}

TEST_CASE("xm-path validity rejects bad paths") {
  const Graph g = special_matching_graph(3);
  const Matching m = Matching::from_edges(g, {0, 1, 2});
  // x=0, edge 0 is M: a path ending on an M-edge is invalid.
  CHECK_FALSE(is_valid_xm_path(g, m, 0, PathWitness{{0, 1}, {0}}));
  // 0-2 then 2-3 (M), ending on M.
  const EdgeId e02 = *g.edge_between(0, 2);
  CHECK(is_valid_xm_path(g, m, 0, PathWitness{{0, 2}, {e02}}));
  CHECK_FALSE(is_valid_xm_path(g, m, 0, PathWitness{{0, 2, 3}, {e02, 1}}));
}
