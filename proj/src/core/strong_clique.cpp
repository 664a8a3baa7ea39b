#include "core/strong_clique.hpp"

#include <algorithm>

namespace sclq {

Distance edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  if (e == f) return Distance(0);
  if (a.touches(b.u) || a.touches(b.v)) return Distance(1);
  auto du = bfs_distances(g, a.u);
  auto dv = bfs_distances(g, a.v);
  Distance closest = std::min({du[b.u], du[b.v], dv[b.u], dv[b.v]});
  return closest.plus(1);
}

bool within_distance_two(const Graph& g, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  if (a.touches(b.u) || a.touches(b.v)) return true;
  return g.has_edge(a.u, b.u) || g.has_edge(a.u, b.v) || g.has_edge(a.v, b.u) ||
         g.has_edge(a.v, b.v);
}

StrongCliqueCheck check_strong_clique(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  for (EdgeId id : sorted) g.edge(id);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  StrongCliqueCheck result;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!within_distance_two(g, sorted[i], sorted[j])) {
        result.ok = false;
        result.violation = std::make_pair(sorted[i], sorted[j]);
        result.violation_distance = edge_distance(g, sorted[i], sorted[j]);
        return result;
      }
    }
  }
  return result;
}

std::vector<Bitset> conflict_rows(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::vector<Bitset> rows(m, Bitset(m));
  // Edges sharing a vertex, then edges joined through a host edge xy: every
  // edge at x conflicts with every edge at y.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (EdgeId e : inc) {
      for (EdgeId f : inc) {
        if (e != f) rows[e].set(f);
      }
    }
  }
  for (const Edge& link : g.edges()) {
    for (EdgeId e : g.incident_edges(link.u)) {
      for (EdgeId f : g.incident_edges(link.v)) {
        if (e != f) {
          rows[e].set(f);
          rows[f].set(e);
        }
      }
    }
  }
  return rows;
}

Graph conflict_graph(const Graph& g) {
  auto rows = conflict_rows(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t e = 0; e < rows.size(); ++e) {
    for (std::size_t f = rows[e].next(e + 1); f < rows[e].size(); f = rows[e].next(f + 1)) {
      pairs.emplace_back(static_cast<Vertex>(e), static_cast<Vertex>(f));
    }
  }
  return Graph::build(g.edge_count(), pairs);
}

StrongCliqueResult strong_clique_number(const Graph& g) {
  StrongCliqueResult result;
  if (g.edge_count() == 0) return result;
  auto clique = maximum_clique(conflict_rows(g));
  result.witness.assign(clique.begin(), clique.end());
  result.size = result.witness.size();
  if (!is_strong_clique(g, result.witness)) {
    throw Error(ErrorCode::precondition, "internal error: strong clique witness failed validation");
  }
  return result;
}

std::size_t brute_force_sc(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kBruteForceEdgeCap) {
    throw Error(ErrorCode::too_large, "brute force limited to " +
                                          std::to_string(kBruteForceEdgeCap) + " edges");
  }
  std::vector<std::uint32_t> compatible(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f = 0; f < m; ++f) {
      if (edge_distance(g, e, f) <= Distance(2)) compatible[e] |= 1u << f;
    }
  }
  auto is_clique = [&](std::uint32_t subset) {
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(rest));
      if ((subset & ~compatible[e]) != 0) return false;
    }
    return true;
  };
  for (std::size_t size = m; size > 0; --size) {
    // Gosper's hack over all subsets of the given size.
    std::uint32_t subset = (1u << size) - 1;
    const std::uint32_t limit = 1u << m;
    while (subset < limit) {
      if (is_clique(subset)) return size;
      const std::uint32_t low = subset & (~subset + 1);
      const std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return 0;
}

}  // namespace sclq
