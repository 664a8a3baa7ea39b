#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sclq {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

enum class ErrorCode {
  invalid_argument,
  parse,
  domain,
  too_large,
  precondition,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Non-negative path length extended with an explicit infinite value.
/// Infinite compares greater than every finite length.
class Distance {
 public:
  constexpr explicit Distance(std::uint32_t value) : value_(value), finite_(true) {}

  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  std::uint32_t value() const {
    if (!finite_) throw Error(ErrorCode::domain, "distance is infinite");
    return value_;
  }

  constexpr bool operator==(const Distance& other) const = default;

  constexpr std::strong_ordering operator<=>(const Distance& other) const {
    if (finite_ != other.finite_) {
      return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return value_ <=> other.value_;
  }

  constexpr Distance plus(std::uint32_t delta) const {
    return finite_ ? Distance(value_ + delta) : infinite();
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  constexpr Distance() : value_(0), finite_(false) {}

  std::uint32_t value_;
  bool finite_;
};

/// Endpoints are stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids follow construction order. Neighbor lists are sorted ascending,
/// and incident_edges(v)[i] is the id of the edge {v, neighbors(v)[i]}.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Rejects loops, out-of-range endpoints and
  /// duplicate pairs (either orientation).
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
  }

  std::size_t vertex_count() const { return neighbors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const EdgeId> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  bool valid_vertex(Vertex v) const { return v < vertex_count(); }
  bool valid_edge(EdgeId e) const { return e < edge_count(); }

  /// Edge set as sorted (u, v) pairs; two graphs with equal sorted edge sets
  /// and vertex counts are identical as labeled graphs.
  std::vector<Edge> sorted_edges() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// A graph derived from a parent by deletion or edge-induction, with
/// the relabeling maps in both directions.
struct Subgraph {
  Graph graph;
  std::vector<std::optional<Vertex>> vertex_to_new;  // indexed by parent vertex
  std::vector<std::optional<EdgeId>> edge_to_new;    // indexed by parent edge
  std::vector<Vertex> vertex_to_old;                 // indexed by new vertex
  std::vector<EdgeId> edge_to_old;                   // indexed by new edge
};

struct Bipartition {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<std::uint8_t> side;  // 0 for x, 1 for y, indexed by vertex
};

std::size_t max_degree(const Graph& g);

/// Two-coloring with every edge crossing. Within each component the side
/// holding the component's lowest vertex is x. Absent when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
Distance vertex_distance(const Graph& g, Vertex u, Vertex v);

/// Largest finite distance between two vertices, or infinite when the graph
/// is disconnected. The empty and single-vertex graphs have diameter 0.
Distance diameter(const Graph& g);

/// G[S]: the endpoints of S, renumbered in ascending parent order, with S as
/// the edge set (ordered by ascending parent id).
Subgraph edge_induced_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// G - edges - vertices. Surviving vertices and edges keep their relative order.
Subgraph remove_elements(const Graph& g, std::span<const Vertex> vertices,
                         std::span<const EdgeId> edges);

/// Induced subgraph on the listed vertices, G[W].
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace sclq
