#include "core/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace sclq {

Matching Matching::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  Matching m;
  m.partner_.assign(g.vertex_count(), std::nullopt);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (m.partner_[e.u] || m.partner_[e.v]) {
      throw Error(ErrorCode::invalid_argument,
                  "edges are not vertex-disjoint at edge " + std::to_string(id));
    }
    m.partner_[e.u] = e.v;
    m.partner_[e.v] = e.u;
  }
  m.edges_ = std::move(edges);
  return m;
}

std::vector<Vertex> Matching::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < partner_.size(); ++v) {
    if (partner_[v]) out.push_back(v);
  }
  return out;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : vertices) {
    if (!g.valid_vertex(v)) return false;
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

// Kuhn's augmenting paths, x side in ascending order.
Matching bipartite_matching(const Graph& g, const Bipartition& parts) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Vertex>> mate(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;

  // Iterative DFS over alternating paths starting at a free x vertex.
  auto augment = [&](Vertex root) {
    ++stamp;
    struct Frame {
      Vertex x;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<Vertex> via;  // y chosen at each level
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nbrs = g.neighbors(top.x);
      if (top.next == nbrs.size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      Vertex y = nbrs[top.next++];
      if (seen[y] == stamp) continue;
      seen[y] = stamp;
      if (!mate[y]) {
        via.push_back(y);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          mate[stack[i].x] = via[i];
          mate[via[i]] = stack[i].x;
        }
        return true;
      }
      via.push_back(y);
      stack.push_back({*mate[y], 0});
    }
    return false;
  };

  for (Vertex x : parts.x) {
    if (!mate[x] && g.degree(x) > 0) augment(x);
  }
  std::vector<EdgeId> edges;
  for (Vertex x : parts.x) {
    if (mate[x]) edges.push_back(*g.edge_between(x, *mate[x]));
  }
  return Matching::from_edges(g, std::move(edges));
}

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
    return h;
  }
};

// Exhaustive branching for maximum matching on general graphs. A state is the
// set of still-available vertices. Isolated vertices are dropped and degree-1
// vertices are matched to their unique neighbor; otherwise the available
// vertex of least degree is matched to each neighbor in turn (some maximum
// matching always covers a non-isolated vertex).
class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g), words_((g.vertex_count() + 63) / 64) {}

  Matching run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) set(all, v);
    std::vector<EdgeId> chosen;
    reconstruct(all, chosen);
    return Matching::from_edges(g_, std::move(chosen));
  }

 private:
  using Mask = std::vector<std::uint64_t>;

  static bool test(const Mask& m, Vertex v) { return (m[v / 64] >> (v % 64)) & 1; }
  static void set(Mask& m, Vertex v) { m[v / 64] |= std::uint64_t{1} << (v % 64); }
  static void clear(Mask& m, Vertex v) { m[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  std::size_t live_degree(const Mask& m, Vertex v) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += test(m, w);
    return d;
  }

  std::optional<Vertex> first_live_neighbor(const Mask& m, Vertex v) const {
    for (Vertex w : g_.neighbors(v)) {
      if (test(m, w)) return w;
    }
    return std::nullopt;
  }

  // Applies forced moves; returns the forced edges and leaves `m` reduced.
  // On return, every remaining vertex has live degree >= 2, and `pick` holds
  // the least-degree remaining vertex (if any).
  std::vector<EdgeId> reduce(Mask& m, std::optional<Vertex>& pick) const {
    std::vector<EdgeId> forced;
    bool changed = true;
    while (changed) {
      changed = false;
      pick.reset();
      std::size_t best = SIZE_MAX;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (!test(m, v)) continue;
        std::size_t d = live_degree(m, v);
        if (d == 0) {
          clear(m, v);
          changed = true;
        } else if (d == 1) {
          Vertex w = *first_live_neighbor(m, v);
          forced.push_back(*g_.edge_between(v, w));
          clear(m, v);
          clear(m, w);
          changed = true;
        } else if (d < best) {
          best = d;
          pick = v;
        }
      }
    }
    return forced;
  }

  std::size_t solve(Mask m) {
    std::optional<Vertex> pick;
    std::size_t base = reduce(m, pick).size();
    if (!pick) return base;
    auto it = memo_.find(m);
    if (it != memo_.end()) return base + it->second;
    std::size_t best = 0;
    std::size_t live = 0;
    for (auto w : m) live += static_cast<std::size_t>(std::popcount(w));
    for (Vertex u : g_.neighbors(*pick)) {
      if (!test(m, u)) continue;
      Mask next = m;
      clear(next, *pick);
      clear(next, u);
      best = std::max(best, 1 + solve(std::move(next)));
      if (best == live / 2) break;
    }
    memo_.emplace(m, best);
    return base + best;
  }

  void reconstruct(Mask m, std::vector<EdgeId>& out) {
    std::optional<Vertex> pick;
    for (EdgeId id : reduce(m, pick)) out.push_back(id);
    if (!pick) return;
    const std::size_t target = solve(m);
    for (Vertex u : g_.neighbors(*pick)) {
      if (!test(m, u)) continue;
      Mask next = m;
      clear(next, *pick);
      clear(next, u);
      if (1 + solve(next) == target) {
        out.push_back(*g_.edge_between(*pick, u));
        reconstruct(std::move(next), out);
        return;
      }
    }
  }

  const Graph& g_;
  std::size_t words_;
  std::unordered_map<Mask, std::size_t, MaskHash> memo_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  if (auto parts = bipartition(g)) return bipartite_matching(g, *parts);
  return MatchingSearch(g).run();
}

VertexCover konig_cover(const Graph& g, const Matching& m) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorCode::precondition, "graph is not bipartite");
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    if (m.partner(e.u) != e.v) throw Error(ErrorCode::precondition, "matching does not belong to graph");
  }

  const std::size_t n = g.vertex_count();
  std::vector<bool> reached(n, false);
  std::deque<Vertex> queue;
  for (Vertex x : parts->x) {
    if (!m.covers(x)) {
      reached[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (parts->side[v] == 0) {
      for (Vertex y : g.neighbors(v)) {
        if (reached[y] || m.partner(v) == y) continue;
        if (!m.covers(y)) {
          throw Error(ErrorCode::precondition, "matching is not maximum: augmenting path ends at " +
                                                   std::to_string(y));
        }
        reached[y] = true;
        queue.push_back(y);
      }
    } else {
      Vertex x = *m.partner(v);
      if (!reached[x]) {
        reached[x] = true;
        queue.push_back(x);
      }
    }
  }

  VertexCover cover;
  for (Vertex v = 0; v < n; ++v) {
    const bool in_x = parts->side[v] == 0;
    if (in_x != reached[v]) cover.vertices.push_back(v);
  }
  return cover;
}

namespace {

std::size_t cover_search(const Graph& g, std::uint64_t live,
                         std::unordered_map<std::uint64_t, std::size_t>& memo) {
  auto bit = [](Vertex v) { return std::uint64_t{1} << v; };
  Vertex pick = 0;
  std::size_t best_degree = 0;
  for (std::uint64_t rest = live; rest; rest &= rest - 1) {
    auto v = static_cast<Vertex>(std::countr_zero(rest));
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += (live & bit(w)) != 0;
    if (d > best_degree) {
      best_degree = d;
      pick = v;
    }
  }
  if (best_degree == 0) return 0;
  if (auto it = memo.find(live); it != memo.end()) return it->second;

  std::size_t take = 1 + cover_search(g, live & ~bit(pick), memo);
  std::uint64_t without = live & ~bit(pick);
  for (Vertex w : g.neighbors(pick)) without &= ~bit(w);
  std::size_t skip = best_degree + cover_search(g, without, memo);
  std::size_t best = std::min(take, skip);
  memo.emplace(live, best);
  return best;
}

}  // namespace

std::size_t vertex_cover_number(const Graph& g) {
  if (bipartition(g)) return maximum_matching(g).size();
  if (g.vertex_count() > kExactCoverVertexCap) {
    throw Error(ErrorCode::too_large, "too large for exact τ");
  }
  std::uint64_t live = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) live |= std::uint64_t{1} << v;
  std::unordered_map<std::uint64_t, std::size_t> memo;
  return cover_search(g, live, memo);
}

}  // namespace sclq
