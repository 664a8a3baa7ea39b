#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sclq {

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g;
  g.neighbors_.assign(n, {});
  g.incident_.assign(n, {});
  g.edges_.reserve(pairs.size());

  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::invalid_argument,
                  "out of range: pair {" + std::to_string(a) + "," + std::to_string(b) +
                      "} with n=" + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }

  std::vector<Edge> sorted = g.edges_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::invalid_argument, "duplicate edge {" + std::to_string(dup->u) + "," +
                                                 std::to_string(dup->v) + "}");
  }

  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    adj[e.u].emplace_back(e.v, id);
    adj[e.v].emplace_back(e.u, id);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    g.neighbors_[v].reserve(adj[v].size());
    g.incident_[v].reserve(adj[v].size());
    for (const auto& [w, id] : adj[v]) {
      g.neighbors_[v].push_back(w);
      g.incident_[v].push_back(id);
    }
  }
  return g;
}

const Edge& Graph::edge(EdgeId id) const {
  if (!valid_edge(id)) {
    throw Error(ErrorCode::invalid_argument, "invalid edge id " + std::to_string(id));
  }
  return edges_[id];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!valid_vertex(v)) {
    throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
  }
  return neighbors_[v];
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  if (!valid_vertex(v)) {
    throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
  }
  return incident_[v];
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (!valid_vertex(a) || !valid_vertex(b)) return std::nullopt;
  if (neighbors_[a].size() > neighbors_[b].size()) std::swap(a, b);
  const auto& list = neighbors_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it == list.end() || *it != b) return std::nullopt;
  return incident_[a][static_cast<std::size_t>(it - list.begin())];
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t unset = 2;
  std::vector<std::uint8_t> side(n, unset);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != unset) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == unset) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.side = side;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? result.x : result.y).push_back(v);
  return result;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (!g.valid_vertex(source)) {
    throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(source));
  }
  std::vector<Distance> dist(g.vertex_count(), Distance::infinite());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w].is_infinite()) {
        dist[w] = dist[v].plus(1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance vertex_distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid_vertex(v)) {
    throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
  }
  return bfs_distances(g, u)[v];
}

Distance diameter(const Graph& g) {
  Distance best(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const Distance& d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

namespace {

// Builds the subgraph keeping the flagged vertices and edges; kept edges must
// have both endpoints kept.
Subgraph restrict(const Graph& g, const std::vector<bool>& keep_vertex,
                  const std::vector<bool>& keep_edge) {
  Subgraph out;
  out.vertex_to_new.assign(g.vertex_count(), std::nullopt);
  out.edge_to_new.assign(g.edge_count(), std::nullopt);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!keep_vertex[v]) continue;
    out.vertex_to_new[v] = static_cast<Vertex>(out.vertex_to_old.size());
    out.vertex_to_old.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!keep_edge[id]) continue;
    const Edge& e = g.edge(id);
    out.edge_to_new[id] = static_cast<EdgeId>(out.edge_to_old.size());
    out.edge_to_old.push_back(id);
    pairs.emplace_back(*out.vertex_to_new[e.u], *out.vertex_to_new[e.v]);
  }
  out.graph = Graph::build(out.vertex_to_old.size(), pairs);
  return out;
}

}  // namespace

Subgraph edge_induced_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  std::vector<bool> keep_edge(g.edge_count(), false);
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    keep_edge[id] = true;
    keep_vertex[e.u] = true;
    keep_vertex[e.v] = true;
  }
  return restrict(g, keep_vertex, keep_edge);
}

Subgraph remove_elements(const Graph& g, std::span<const Vertex> vertices,
                         std::span<const EdgeId> edges) {
  std::vector<bool> keep_vertex(g.vertex_count(), true);
  std::vector<bool> keep_edge(g.edge_count(), true);
  for (EdgeId id : edges) {
    g.edge(id);
    keep_edge[id] = false;
  }
  for (Vertex v : vertices) {
    if (!g.valid_vertex(v)) {
      throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
    }
    keep_vertex[v] = false;
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (!keep_vertex[e.u] || !keep_vertex[e.v]) keep_edge[id] = false;
  }
  return restrict(g, keep_vertex, keep_edge);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  for (Vertex v : vertices) {
    if (!g.valid_vertex(v)) {
      throw Error(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
    }
    keep_vertex[v] = true;
  }
  std::vector<bool> keep_edge(g.edge_count(), false);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    keep_edge[id] = keep_vertex[e.u] && keep_vertex[e.v];
  }
  return restrict(g, keep_vertex, keep_edge);
}

}  // namespace sclq
