#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/max_clique.hpp"

namespace sclq {

/// Distance between two edges in the line graph. 0 for the same edge, 1 for
/// a shared endpoint, otherwise one more than the closest pair of endpoints;
/// infinite across components.
Distance edge_distance(const Graph& g, EdgeId e, EdgeId f);

/// edge_distance(g, e, f) <= 2, decided locally: a shared endpoint or a host
/// edge joining an endpoint of e to an endpoint of f.
bool within_distance_two(const Graph& g, EdgeId e, EdgeId f);

struct StrongCliqueCheck {
  bool ok = true;
  /// Lexicographically first (by position pair in ascending id order) pair
  /// at distance > 2, with its distance.
  std::optional<std::pair<EdgeId, EdgeId>> violation;
  std::optional<Distance> violation_distance;
};

StrongCliqueCheck check_strong_clique(const Graph& g, std::span<const EdgeId> edges);
inline bool is_strong_clique(const Graph& g, std::span<const EdgeId> edges) {
  return check_strong_clique(g, edges).ok;
}

/// Square of the line graph: vertex i is edge i of g, adjacency iff the
/// two edges are within distance 2. Strong cliques of g are its cliques.
Graph conflict_graph(const Graph& g);

/// Adjacency rows of the conflict graph, for the clique solver.
std::vector<Bitset> conflict_rows(const Graph& g);

struct StrongCliqueResult {
  std::size_t size = 0;
  std::vector<EdgeId> witness;  // ascending
};

/// Exact SC(G) with a validated witness.
StrongCliqueResult strong_clique_number(const Graph& g);

inline constexpr std::size_t kBruteForceEdgeCap = 20;

/// Exhaustive search over edge subsets (largest first); only for small
/// graphs. Throws too_large above kBruteForceEdgeCap edges.
std::size_t brute_force_sc(const Graph& g);

}  // namespace sclq
