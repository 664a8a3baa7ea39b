#include <doctest.h>

#include <sstream>

#include "core/codec.hpp"
#include "core/generators.hpp"
#include "helpers.hpp"

using namespace sclq;
using testing::graph;

TEST_CASE("build rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_WITH_AS(graph(3, {{0, 0}}), doctest::Contains("loop"), Error);
  CHECK_THROWS_WITH_AS(graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"), Error);
  CHECK_THROWS_WITH_AS(graph(3, {{0, 3}}), doctest::Contains("out of range"), Error);
}

TEST_CASE("neighbor lists are sorted and parallel to incident edges") {
  const Graph g = graph(4, {{2, 3}, {0, 3}, {3, 1}});
  const auto nb = g.neighbors(3);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0] == 0);
  CHECK(nb[1] == 1);
  CHECK(nb[2] == 2);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    CHECK(g.edge(g.incident_edges(3)[i]).other(3) == nb[i]);
  }
  CHECK(g.edge(2).u == 1);
  CHECK(g.edge(2).v == 3);
  CHECK(*g.edge_between(3, 0) == 1);
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("distance ordering puts infinity last") {
  CHECK(Distance(3) < Distance::infinite());
  CHECK(Distance::infinite().plus(1).is_infinite());
  CHECK(Distance::infinite().to_string() == "inf");
  CHECK_THROWS_AS((void)Distance::infinite().value(), Error);
}

TEST_CASE("bipartition, distances and diameter") {
  CHECK(bipartition(cycle_graph(6)).has_value());
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  const auto bp = *bipartition(path_graph(4));
  CHECK(bp.x == std::vector<Vertex>{0, 2});
  CHECK(diameter(path_graph(5)) == Distance(4));
  CHECK(diameter(graph(3, {{0, 1}})).is_infinite());
  CHECK(vertex_distance(cycle_graph(6), 0, 3) == Distance(3));
}

TEST_CASE("subgraph maps round-trip") {
  const Graph g = complete_graph(4);
  const std::vector<EdgeId> s{1, 5};
  const Subgraph h = edge_induced_subgraph(g, s);
  CHECK(h.graph.edge_count() == 2);
  for (EdgeId e = 0; e < h.graph.edge_count(); ++e) {
    const Edge& mine = h.graph.edge(e);
    const Edge& parent = g.edge(h.edge_to_old[e]);
    CHECK(h.vertex_to_old[mine.u] == parent.u);
    CHECK(h.vertex_to_old[mine.v] == parent.v);
  }
  const std::vector<Vertex> drop{0};
  const Subgraph r = remove_elements(g, drop, {});
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 3);
  CHECK_FALSE(r.vertex_to_new[0].has_value());
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(to_graph6(Graph::build(0, std::vector<std::pair<Vertex, Vertex>>{})) == "?");
  CHECK(from_graph6(">>graph6<<Dhc").edge_count() == 5);
}

TEST_CASE("graph6 round-trips, including the 4-byte size prefix") {
  for (int n : {1, 2, 7, 30, 62, 63, 64, 100}) {
    const Graph g = random_graph(n, 0.3, static_cast<std::uint64_t>(n));
    const Graph back = from_graph6(to_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.sorted_edges() == g.sorted_edges());
  }
  CHECK(to_graph6(random_graph(63, 0.0, 1)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(":Fa@x^"), Error);
  CHECK_THROWS_AS(from_graph6("&DI?AO?"), Error);
  CHECK_THROWS_AS(from_graph6(">>sparse6<<:Fa@x^"), Error);
  CHECK_THROWS_AS(from_graph6("Dh"), Error);      // truncated
  CHECK_THROWS_AS(from_graph6("Dhcc"), Error);    // trailing byte
  CHECK_THROWS_AS(from_graph6("Dhd"), Error);     // nonzero padding
  CHECK_THROWS_AS(from_graph6("D h"), Error);
}

TEST_CASE("multi-graph reading reports line numbers") {
  const auto gs = read_graphs("Dhc\n\nC~\n", GraphFormat::graph6);
  CHECK(gs.size() == 2);
  try {
    (void)read_graphs("Dhc\nC~\nbad!\n", GraphFormat::graph6);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("edge-list format") {
  const auto gs = read_graphs("# two graphs\n3 2\n0 1\n1 2\n2 1\n0 1\n", GraphFormat::edge_list);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].edge_count() == 2);
  CHECK(gs[1].vertex_count() == 2);
  const Graph c5 = cycle_graph(5);
  CHECK(read_graphs(to_edge_list(c5), GraphFormat::edge_list).front().sorted_edges() == c5.sorted_edges());
  try {
    (void)read_graphs("3 2\n0 1\n0 7\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS((void)read_graphs("3 2\n0 1\n", GraphFormat::edge_list), Error);
  CHECK_THROWS_AS((void)read_graphs("3 1\n1 1\n", GraphFormat::edge_list), Error);
}
