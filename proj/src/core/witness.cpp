#include "core/witness.hpp"

#include <algorithm>
#include <numeric>

#include "core/strong_clique.hpp"

namespace sclq {

void SemiCompleteDigraph::add_arc(std::size_t from, std::size_t to) {
  if (from >= size_ || to >= size_ || from == to) {
    throw Error(ErrorCode::invalid_argument, "invalid arc");
  }
  arcs_[from * size_ + to] = true;
}

bool SemiCompleteDigraph::is_semicomplete() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if (!has_arc(i, j) && !has_arc(j, i)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<bool>> reachability(const SemiCompleteDigraph& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (d.has_arc(i, j)) reach[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

}  // namespace

bool SemiCompleteDigraph::is_strongly_connected() const {
  auto reach = reachability(*this);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (!reach[i][j]) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> SemiCompleteDigraph::ordered_components() const {
  auto reach = reachability(*this);
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> assigned(size_, false);
  for (std::size_t i = 0; i < size_; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t j = i; j < size_; ++j) {
      if (!assigned[j] && reach[i][j] && reach[j][i]) {
        comp.push_back(j);
        assigned[j] = true;
      }
    }
    components.push_back(std::move(comp));
  }
  // A component that reaches more vertices comes earlier; reach sets of
  // distinct components are nested, so this is a topological order.
  auto reach_count = [&](const std::vector<std::size_t>& comp) {
    return std::count(reach[comp.front()].begin(), reach[comp.front()].end(), true);
  };
  std::stable_sort(components.begin(), components.end(),
                   [&](const auto& a, const auto& b) { return reach_count(a) > reach_count(b); });
  return components;
}

OrientedMatching orient(const Graph& g, const Matching& m, const Bipartition& sides) {
  OrientedMatching out;
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    if (sides.side.size() != g.vertex_count() || sides.side[e.u] == sides.side[e.v]) {
      throw Error(ErrorCode::precondition, "matching edge does not cross the bipartition");
    }
    out.edges.push_back(id);
    out.x.push_back(sides.side[e.u] == 0 ? e.u : e.v);
    out.y.push_back(sides.side[e.u] == 0 ? e.v : e.u);
  }
  return out;
}

namespace {

void require_bipartite_sides(const Graph& g, const Bipartition& sides) {
  if (sides.side.size() != g.vertex_count()) {
    throw Error(ErrorCode::precondition, "bipartition does not match graph");
  }
  for (const Edge& e : g.edges()) {
    if (sides.side[e.u] == sides.side[e.v]) {
      throw Error(ErrorCode::precondition, "graph is not bipartite with the given sides");
    }
  }
}

void require_strong_clique(const Graph& g, const Matching& m) {
  auto check = check_strong_clique(g, m.edges());
  if (!check.ok) {
    throw Error(ErrorCode::precondition,
                "distance > 2 pair: edges " + std::to_string(check.violation->first) + " and " +
                    std::to_string(check.violation->second));
  }
}

Bipartition require_bipartite(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorCode::precondition, "graph is not bipartite");
  return *parts;
}

}  // namespace

SemiCompleteDigraph auxiliary_digraph(const Graph& g, const Matching& m, const Bipartition& sides) {
  require_bipartite_sides(g, sides);
  require_strong_clique(g, m);
  OrientedMatching om = orient(g, m, sides);
  SemiCompleteDigraph d(om.edges.size());
  for (std::size_t i = 0; i < om.edges.size(); ++i) {
    for (std::size_t j = 0; j < om.edges.size(); ++j) {
      if (i != j && g.has_edge(om.x[i], om.y[j])) d.add_arc(i, j);
    }
  }
  return d;
}

std::vector<std::size_t> semicomplete_hamiltonian_path(const SemiCompleteDigraph& d) {
  if (!d.is_semicomplete()) throw Error(ErrorCode::precondition, "digraph is not semicomplete");
  std::vector<std::size_t> path;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (path.empty() || d.has_arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (d.has_arc(path[i], v) && d.has_arc(v, path[i + 1])) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
        placed = true;
        break;
      }
    }
    if (!placed) path.push_back(v);
  }
  return path;
}

bool is_valid_path(const Graph& g, const PathWitness& path) {
  if (path.vertices.empty() || path.edges.size() + 1 != path.vertices.size()) return false;
  std::vector<Vertex> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (!g.valid_edge(path.edges[i])) return false;
    const Edge& e = g.edge(path.edges[i]);
    if (!(e == Edge{std::min(path.vertices[i], path.vertices[i + 1]),
                    std::max(path.vertices[i], path.vertices[i + 1])})) {
      return false;
    }
  }
  return true;
}

namespace {

PathWitness path_through(const Graph& g, const std::vector<Vertex>& vertices) {
  PathWitness path{vertices, {}};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto id = g.edge_between(vertices[i], vertices[i + 1]);
    if (!id) throw Error(ErrorCode::precondition, "internal error: missing path edge");
    path.edges.push_back(*id);
  }
  return path;
}

// Alternating walk y_{o0} x_{o0} y_{o1} x_{o1} ... following an arc sequence.
std::vector<Vertex> unfold(const OrientedMatching& om, const std::vector<std::size_t>& order) {
  std::vector<Vertex> out;
  for (std::size_t i : order) {
    out.push_back(om.y[i]);
    out.push_back(om.x[i]);
  }
  return out;
}

// Directed cycle on exactly `length` vertices, anchored at its smallest
// vertex; exhaustive.
class DirectedCycleSearch {
 public:
  DirectedCycleSearch(const SemiCompleteDigraph& d, std::size_t length)
      : d_(d), length_(length), used_(d.size(), false) {}

  std::optional<std::vector<std::size_t>> run() {
    for (std::size_t a = 0; a + length_ <= d_.size(); ++a) {
      anchor_ = a;
      path_ = {a};
      used_[a] = true;
      if (extend()) return path_;
      used_[a] = false;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const std::size_t end = path_.back();
    if (path_.size() == length_) return d_.has_arc(end, anchor_);
    for (std::size_t w = anchor_ + 1; w < d_.size(); ++w) {
      if (used_[w] || !d_.has_arc(end, w)) continue;
      used_[w] = true;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  const SemiCompleteDigraph& d_;
  std::size_t length_;
  std::size_t anchor_ = 0;
  std::vector<std::size_t> path_;
  std::vector<bool> used_;
};

// Induced sub-digraph on `keep` with its Hamiltonian path mapped back.
std::vector<std::size_t> hamiltonian_path_within(const SemiCompleteDigraph& d,
                                                 const std::vector<std::size_t>& keep) {
  SemiCompleteDigraph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && d.has_arc(keep[i], keep[j])) sub.add_arc(i, j);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i : semicomplete_hamiltonian_path(sub)) out.push_back(keep[i]);
  return out;
}

std::size_t count_matching_edges(const Graph& g, const Matching& m, const CycleWitness& cycle) {
  std::size_t used = 0;
  const auto& vs = cycle.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (m.partner(vs[i]) == vs[(i + 1) % vs.size()]) ++used;
  }
  (void)g;
  return used;
}

}  // namespace

PathWitness lemma21_path(const Graph& g, const Matching& m) {
  if (m.size() == 0) throw Error(ErrorCode::precondition, "matching must be nonempty");
  Bipartition sides = require_bipartite(g);
  SemiCompleteDigraph d = auxiliary_digraph(g, m, sides);
  OrientedMatching om = orient(g, m, sides);
  return path_through(g, unfold(om, semicomplete_hamiltonian_path(d)));
}

Lemma21Cycle lemma21_cycle(const Graph& g, const Matching& m) {
  if (m.size() < 4) throw Error(ErrorCode::precondition, "m must be at least 4");
  Bipartition sides = require_bipartite(g);
  SemiCompleteDigraph d = auxiliary_digraph(g, m, sides);
  OrientedMatching om = orient(g, m, sides);
  const std::size_t size = m.size();

  Lemma21Cycle result;
  result.digraph_strong = d.is_strongly_connected();
  if (result.digraph_strong) {
    auto directed = DirectedCycleSearch(d, size - 1).run();
    if (!directed) {
      throw Error(ErrorCode::precondition,
                  "internal error: strong semicomplete digraph without an (m-1)-cycle");
    }
    result.cycle.vertices = unfold(om, *directed);
  } else {
    std::vector<std::size_t> order;
    for (const auto& comp : d.ordered_components()) {
      auto part = hamiltonian_path_within(d, comp);
      order.insert(order.end(), part.begin(), part.end());
    }
    // order[0] lies in the source component and order.back() in the sink,
    // so (order[0], order.back()) is an arc: x_{first} y_{last} closes the
    // cycle x_{o0} y_{o1} x_{o1} ... y_{o(m-1)}.
    std::vector<Vertex> vs{om.x[order.front()]};
    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
      vs.push_back(om.y[order[i]]);
      vs.push_back(om.x[order[i]]);
    }
    vs.push_back(om.y[order.back()]);
    result.cycle.vertices = std::move(vs);
  }
  if (!is_valid_cycle(g, result.cycle) || result.cycle.vertices.size() != 2 * size - 2) {
    throw Error(ErrorCode::precondition, "internal error: invalid cycle construction");
  }
  result.matching_edges_used = count_matching_edges(g, m, result.cycle);
  return result;
}

namespace {

// Mutable view of G for deletion experiments.
class DeletionState {
 public:
  DeletionState(const Graph& g, std::span<const EdgeId> s)
      : g_(g), vertex_alive_(g.vertex_count(), true), edge_alive_(g.edge_count(), true),
        in_s_(g.edge_count(), false), touches_s_(g.vertex_count(), false), s_(s.begin(), s.end()) {
    for (EdgeId id : s_) {
      in_s_[id] = true;
      touches_s_[g.edge(id).u] = true;
      touches_s_[g.edge(id).v] = true;
    }
  }

  bool linked(Vertex a, Vertex b) const {
    auto id = g_.edge_between(a, b);
    return id && edge_alive_[*id];
  }

  bool s_is_strong_clique() const {
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const Edge& a = g_.edge(s_[i]);
      for (std::size_t j = i + 1; j < s_.size(); ++j) {
        const Edge& b = g_.edge(s_[j]);
        if (a.touches(b.u) || a.touches(b.v)) continue;
        if (!linked(a.u, b.u) && !linked(a.u, b.v) && !linked(a.v, b.u) && !linked(a.v, b.v)) {
          return false;
        }
      }
    }
    return true;
  }

  bool try_remove_vertex(Vertex v) {
    if (!vertex_alive_[v] || touches_s_[v]) return false;
    std::vector<EdgeId> dropped;
    for (EdgeId id : g_.incident_edges(v)) {
      if (edge_alive_[id]) {
        edge_alive_[id] = false;
        dropped.push_back(id);
      }
    }
    vertex_alive_[v] = false;
    if (s_is_strong_clique()) return true;
    vertex_alive_[v] = true;
    for (EdgeId id : dropped) edge_alive_[id] = true;
    return false;
  }

  bool try_remove_edge(EdgeId id) {
    if (!edge_alive_[id] || in_s_[id]) return false;
    edge_alive_[id] = false;
    if (s_is_strong_clique()) return true;
    edge_alive_[id] = true;
    return false;
  }

  std::vector<Vertex> removed_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_alive_.size(); ++v) {
      if (!vertex_alive_[v]) out.push_back(v);
    }
    return out;
  }

  std::vector<EdgeId> removed_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId id = 0; id < edge_alive_.size(); ++id) {
      if (!edge_alive_[id]) out.push_back(id);
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<bool> vertex_alive_;
  std::vector<bool> edge_alive_;
  std::vector<bool> in_s_;
  std::vector<bool> touches_s_;
  std::vector<EdgeId> s_;
};

}  // namespace

MinimalReduction s_minimal_reduce(const Graph& g, std::span<const EdgeId> s) {
  auto check = check_strong_clique(g, s);
  if (!check.ok) {
    throw Error(ErrorCode::precondition, "S is not a strong clique: edges " +
                                             std::to_string(check.violation->first) + " and " +
                                             std::to_string(check.violation->second));
  }
  DeletionState state(g, s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) changed |= state.try_remove_vertex(v);
    for (EdgeId id = 0; id < g.edge_count(); ++id) changed |= state.try_remove_edge(id);
  }
  auto removed_v = state.removed_vertices();
  auto removed_e = state.removed_edges();
  MinimalReduction out{remove_elements(g, removed_v, removed_e), {}};
  for (EdgeId id : s) out.s_edges.push_back(*out.reduced.edge_to_new[id]);
  std::sort(out.s_edges.begin(), out.s_edges.end());
  out.s_edges.erase(std::unique(out.s_edges.begin(), out.s_edges.end()), out.s_edges.end());
  return out;
}

MinimalPropertyReport check_minimal_properties(const Graph& g, std::span<const EdgeId> s,
                                               bool s_is_maximum) {
  MinimalPropertyReport report;
  std::vector<bool> in_s(g.edge_count(), false);
  std::vector<bool> touches(g.vertex_count(), false);
  for (EdgeId id : s) {
    in_s[id] = true;
    touches[g.edge(id).u] = true;
    touches[g.edge(id).v] = true;
  }

  report.covers_vertices.evaluated = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!touches[v]) {
      report.covers_vertices.pass = false;
      report.covers_vertices.counterexample = {v};
      report.covers_vertices.detail = "vertex " + std::to_string(v) + " is not incident with S";
      break;
    }
  }

  report.diameter_at_most_three.evaluated = true;
  for (Vertex u = 0; u < g.vertex_count() && report.diameter_at_most_three.pass; ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (dist[v] > Distance(3)) {
        report.diameter_at_most_three.pass = false;
        report.diameter_at_most_three.counterexample = {u, v};
        report.diameter_at_most_three.detail = "vertices " + std::to_string(u) + " and " +
                                               std::to_string(v) + " at distance " +
                                               dist[v].to_string();
        break;
      }
    }
  }

  std::vector<EdgeId> s_list(s.begin(), s.end());
  report.unique_link.evaluated = true;
  for (EdgeId id = 0; id < g.edge_count() && report.unique_link.pass; ++id) {
    if (in_s[id]) continue;
    const Edge& uv = g.edge(id);
    bool found = false;
    for (EdgeId a : s_list) {
      for (EdgeId b : s_list) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        if (!ea.touches(uv.u) || !eb.touches(uv.v)) continue;
        const Vertex u2 = ea.other(uv.u);
        const Vertex v2 = eb.other(uv.v);
        if (u2 == uv.v || v2 == uv.u || u2 == v2) continue;
        const std::size_t links = g.has_edge(uv.u, uv.v) + g.has_edge(uv.u, v2) +
                                  g.has_edge(u2, uv.v) + g.has_edge(u2, v2);
        if (links == 1) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.unique_link.pass = false;
      report.unique_link.counterexample = {id};
      report.unique_link.detail = "non-S edge " + std::to_string(id) + " is never the only link";
    }
  }

  report.far_edge.evaluated = s_is_maximum;
  if (s_is_maximum) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (in_s[id]) continue;
      bool far = std::any_of(s_list.begin(), s_list.end(), [&](EdgeId other) {
        return edge_distance(g, id, other) >= Distance(3);
      });
      if (!far) {
        report.far_edge.pass = false;
        report.far_edge.counterexample = {id};
        report.far_edge.detail =
            "non-S edge " + std::to_string(id) + " is within distance 2 of all of S";
        break;
      }
    }
  }
  return report;
}

bool is_x_special(const Graph& g, const Matching& m, Vertex x) {
  if (!m.covers(x)) throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(x) + " is unmatched");
  // primed[v]: v plays x_i' ; index[v]: the i of its matching edge (x's edge is 0).
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1);
  std::vector<bool> primed(n, false);
  index[x] = 0;
  index[*m.partner(x)] = 0;
  primed[*m.partner(x)] = true;
  int next = 1;
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    if (e.touches(x)) continue;
    const bool adj_u = g.has_edge(x, e.u);
    const bool adj_v = g.has_edge(x, e.v);
    if (adj_u == adj_v) return false;
    index[e.u] = index[e.v] = next++;
    primed[adj_u ? e.v : e.u] = true;
  }
  auto vs = m.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const Vertex p = vs[a];
      const Vertex q = vs[b];
      if (index[p] == index[q]) continue;
      bool expected;
      if (!primed[p] && !primed[q]) {
        expected = index[p] == 0 || index[q] == 0;
      } else if (primed[p] && primed[q]) {
        expected = index[p] != 0 && index[q] != 0;
      } else {
        expected = false;
      }
      if (g.has_edge(p, q) != expected) return false;
    }
  }
  return true;
}

bool is_special(const Graph& g, const Matching& m) {
  for (Vertex v : m.vertices()) {
    if (is_x_special(g, m, v)) return true;
  }
  return false;
}

bool is_valid_xm_path(const Graph& g, const Matching& m, Vertex x, const PathWitness& path) {
  if (!is_valid_path(g, path) || path.vertices.front() != x || path.edges.empty()) return false;
  for (Vertex v : path.vertices) {
    if (!m.covers(v)) return false;
  }
  const Edge& last = g.edge(path.edges.back());
  if (m.partner(last.u) == last.v) return false;
  std::vector<bool> on_path(g.vertex_count(), false);
  for (Vertex v : path.vertices) on_path[v] = true;
  std::vector<bool> path_edge(g.edge_count(), false);
  for (EdgeId id : path.edges) path_edge[id] = true;
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    if (on_path[e.u] && on_path[e.v] && !path_edge[id]) return false;
  }
  return true;
}

namespace {

class XMPathSearch {
 public:
  XMPathSearch(const Graph& g, const Matching& m, std::size_t length)
      : g_(g), m_(m), length_(length), on_path_(g.vertex_count(), false) {}

  std::optional<PathWitness> run(Vertex x) {
    path_ = {x};
    on_path_[x] = true;
    if (!extend()) return std::nullopt;
    return path_through(g_, path_);
  }

 private:
  bool extend() {
    const Vertex end = path_.back();
    if (path_.size() == length_ + 1) {
      return m_.partner(end) != path_[path_.size() - 2];
    }
    for (Vertex w : g_.neighbors(end)) {
      if (on_path_[w] || !m_.covers(w)) continue;
      const Vertex mate = *m_.partner(w);
      if (on_path_[mate] && mate != end) continue;
      on_path_[w] = true;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      on_path_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  const Matching& m_;
  std::size_t length_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
};

}  // namespace

std::optional<PathWitness> find_xm_path(const Graph& g, const Matching& m, Vertex x,
                                        std::size_t length) {
  if (!m.covers(x)) throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(x) + " is unmatched");
  if (length == 0) throw Error(ErrorCode::invalid_argument, "path length must be at least 1");
  if (length + 1 > 2 * m.size()) return std::nullopt;
  return XMPathSearch(g, m, length).run(x);
}

}  // namespace sclq
