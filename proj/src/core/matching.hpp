#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace sclq {

/// A set of pairwise vertex-disjoint edges of a host graph, with the partner
/// map x -> x' (xx' in M).
class Matching {
 public:
  Matching() = default;

  /// Throws invalid_argument if the edges are not a matching of g.
  static Matching from_edges(const Graph& g, std::vector<EdgeId> edges);

  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool covers(Vertex v) const { return v < partner_.size() && partner_[v].has_value(); }
  std::optional<Vertex> partner(Vertex v) const {
    return v < partner_.size() ? partner_[v] : std::nullopt;
  }

  /// V(M), ascending.
  std::vector<Vertex> vertices() const;

 private:
  std::vector<EdgeId> edges_;  // ascending
  std::vector<std::optional<Vertex>> partner_;
};

struct VertexCover {
  std::vector<Vertex> vertices;  // ascending
};

bool is_vertex_cover(const Graph& g, std::span<const Vertex> vertices);

/// Maximum cardinality matching. Bipartite graphs use augmenting paths from
/// the x side in ascending order; other graphs use memoized exhaustive
/// branching. Depends only on g.
Matching maximum_matching(const Graph& g);

/// Minimum vertex cover inside V(M) from alternating reachability out of the
/// unmatched x-side vertices: (X \ R) u (Y n R). Requires g bipartite and M
/// maximum; throws precondition otherwise.
VertexCover konig_cover(const Graph& g, const Matching& m);

/// Largest vertex count accepted by the exact branching cover for
/// non-bipartite graphs.
inline constexpr std::size_t kExactCoverVertexCap = 64;

/// Exact tau(G). Throws too_large ("too large for exact tau") for a
/// non-bipartite graph above kExactCoverVertexCap vertices.
std::size_t vertex_cover_number(const Graph& g);

}  // namespace sclq
