#include "core/cycles.hpp"

#include <algorithm>
#include <deque>

namespace sclq {

bool is_valid_cycle(const Graph& g, const CycleWitness& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.valid_vertex(vs[i]) || !g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t length)
      : g_(g), length_(length), on_path_(g.vertex_count(), false) {}

  std::optional<CycleWitness> run() {
    const std::size_t n = g_.vertex_count();
    for (Vertex a = 0; a + length_ <= n; ++a) {
      if (usable_degree(a, a) < 2) continue;
      anchor_ = a;
      anchor_dist_ = distances_to_anchor({});
      path_ = {a};
      on_path_[a] = true;
      bool found = extend();
      on_path_[a] = false;
      if (found) return CycleWitness{path_};
    }
    return std::nullopt;
  }

 private:
  std::size_t usable_degree(Vertex v, Vertex floor) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += w >= floor;
    return d;
  }

  // BFS from the anchor inside vertices >= anchor, avoiding blocked vertices.
  std::vector<std::size_t> distances_to_anchor(const std::vector<bool>& blocked) const {
    constexpr std::size_t unreachable = SIZE_MAX;
    std::vector<std::size_t> dist(g_.vertex_count(), unreachable);
    std::deque<Vertex> queue{anchor_};
    dist[anchor_] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g_.neighbors(v)) {
        if (w < anchor_ || dist[w] != unreachable) continue;
        if (!blocked.empty() && blocked[w]) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
    return dist;
  }

  // Can the end of the current path get back to the anchor in `budget` edges
  // without reusing interior path vertices?
  bool can_close(Vertex end, std::size_t budget) const {
    std::vector<bool> blocked = on_path_;
    blocked[anchor_] = false;
    blocked[end] = false;
    auto dist = distances_to_anchor(blocked);
    return dist[end] <= budget;
  }

  bool extend() {
    const Vertex end = path_.back();
    const std::size_t depth = path_.size();
    if (depth == length_) {
      return g_.has_edge(end, anchor_) && path_[1] < path_.back();
    }
    for (Vertex w : g_.neighbors(end)) {
      if (w <= anchor_ || on_path_[w]) continue;
      const std::size_t budget = length_ - depth;
      if (anchor_dist_[w] > budget) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if ((depth < 2 || can_close(w, budget)) && extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t length_;
  Vertex anchor_ = 0;
  std::vector<std::size_t> anchor_dist_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
};

}  // namespace

std::optional<CycleWitness> find_cycle_of_length(const Graph& g, std::size_t length) {
  if (length < 3) {
    throw Error(ErrorCode::invalid_argument, "cycle length must be at least 3");
  }
  return CycleSearch(g, length).run();
}

FreenessResult check_free(const Graph& g, std::span<const std::size_t> lengths) {
  for (std::size_t length : lengths) {
    if (length < 3) throw Error(ErrorCode::invalid_argument, "cycle length must be at least 3");
  }
  FreenessResult result;
  for (std::size_t length : lengths) {
    if (auto cycle = find_cycle_of_length(g, length)) {
      result.free = false;
      result.length = length;
      result.witness = std::move(cycle);
      return result;
    }
  }
  return result;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> parent(n, root);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (best && 2 * dist[v] + 1 >= *best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          const std::size_t cycle = dist[v] + dist[w] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace sclq
