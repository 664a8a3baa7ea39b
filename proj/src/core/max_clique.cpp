#include "core/max_clique.hpp"

#include <algorithm>
#include <numeric>

namespace sclq {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bitset> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<std::uint32_t> run() {
    Bitset all(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
    if (!adj_.empty()) expand(all);
    return best_;
  }

 private:
  // Greedy sequential coloring of P in index order; `order` receives the
  // vertices grouped by color and `bound[i]` the color of order[i].
  void color(const Bitset& p, std::vector<std::uint32_t>& order,
             std::vector<std::uint32_t>& bound) const {
    Bitset uncolored = p;
    std::uint32_t k = 0;
    while (!uncolored.none()) {
      ++k;
      Bitset available = uncolored;
      for (std::size_t v = available.next(0); v < available.size(); v = available.next(v + 1)) {
        available.subtract(adj_[v]);
        uncolored.reset(v);
        order.push_back(static_cast<std::uint32_t>(v));
        bound.push_back(k);
      }
    }
  }

  void expand(Bitset p) {
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> bound;
    color(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::uint32_t v = order[i];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

std::vector<std::uint32_t> maximum_clique(const std::vector<Bitset>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adjacency[v].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return degree[a] > degree[b]; });

  std::vector<std::uint32_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<std::uint32_t>(i);

  std::vector<Bitset> renumbered(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) {
    const Bitset& row = adjacency[v];
    for (std::size_t w = row.next(0); w < row.size(); w = row.next(w + 1)) {
      renumbered[position[v]].set(position[w]);
    }
  }

  std::vector<std::uint32_t> clique = CliqueSearch(std::move(renumbered)).run();
  for (auto& v : clique) v = order[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace sclq
