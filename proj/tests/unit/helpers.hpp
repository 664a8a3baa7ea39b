#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "oracles.hpp"

namespace testing {

inline sclq::Graph graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<sclq::Vertex, sclq::Vertex>> pairs;
  for (auto [u, v] : edges) pairs.emplace_back(static_cast<sclq::Vertex>(u), static_cast<sclq::Vertex>(v));
  return sclq::Graph::build(n, pairs);
}

inline oracle::Plain plain(const sclq::Graph& g) {
  oracle::EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return oracle::make(static_cast<int>(g.vertex_count()), edges);
}

}  // namespace testing

#include "core/matching.hpp"
#include "core/strong_clique.hpp"

namespace testing {

/// A maximum matching of G[maximum strong clique], in G's edge ids. It is a
/// matching of G that is also a strong clique of G.
inline sclq::Matching clique_matching(const sclq::Graph& g) {
  const auto sc = sclq::strong_clique_number(g);
  const sclq::Subgraph h = sclq::edge_induced_subgraph(g, sc.witness);
  const sclq::Matching local = sclq::maximum_matching(h.graph);
  std::vector<sclq::EdgeId> edges;
  for (sclq::EdgeId e : local.edges()) edges.push_back(h.edge_to_old[e]);
  return sclq::Matching::from_edges(g, std::move(edges));
}

}  // namespace testing
