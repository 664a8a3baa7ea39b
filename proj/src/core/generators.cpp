#include "core/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

namespace sclq {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::domain, what);
}

Vertex vx(int v) { return static_cast<Vertex>(v); }

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_probability(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "probability must lie in [0, 1]");
}

}  // namespace

Graph c5_blowup(int t) {
  require(t >= 1, "c5_blowup needs t >= 1");
  Pairs pairs;
  for (int part = 0; part < 5; ++part) {
    const int next = (part + 1) % 5;
    for (int a = 0; a < t; ++a) {
      for (int b = 0; b < t; ++b) pairs.emplace_back(vx(part * t + a), vx(next * t + b));
    }
  }
  return Graph::build(static_cast<std::size_t>(5 * t), pairs);
}

Graph complete_plus_pendants(int q, int p) {
  require(q >= 2 && p >= 1, "complete_plus_pendants needs q >= 2 and p >= 1");
  Pairs pairs;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) pairs.emplace_back(vx(i), vx(j));
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < p; ++j) pairs.emplace_back(vx(i), vx(q + i * p + j));
  }
  return Graph::build(static_cast<std::size_t>(q + q * p), pairs);
}

Graph bipartite_pendant_extremal(int k, int p) {
  require(k >= 2 && p >= 1, "bipartite_pendant_extremal needs k >= 2 and p >= 1");
  const int small = k - 1;
  const int big = p + k - 1;
  Pairs pairs;
  for (int a = 0; a < small; ++a) {
    for (int b = 0; b < big; ++b) pairs.emplace_back(vx(a), vx(small + b));
  }
  for (int j = 0; j < p; ++j) pairs.emplace_back(vx(small), vx(small + big + j));
  return Graph::build(static_cast<std::size_t>(small + big + p), pairs);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete needs n >= 1");
  Pairs pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(vx(i), vx(j));
  }
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  Pairs pairs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) pairs.emplace_back(vx(i), vx(a + j));
  }
  return Graph::build(static_cast<std::size_t>(a + b), pairs);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Pairs pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(vx(i), vx((i + 1) % n));
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Pairs pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(vx(i), vx(i + 1));
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs n >= 1");
  Pairs pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, vx(i));
  return Graph::build(static_cast<std::size_t>(leaves + 1), pairs);
}

Graph petersen_graph() {
  Pairs pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(vx(i), vx((i + 1) % 5));
  for (int i = 0; i < 5; ++i) pairs.emplace_back(vx(i), vx(i + 5));
  for (int i = 0; i < 5; ++i) pairs.emplace_back(vx(i + 5), vx((i + 2) % 5 + 5));
  return Graph::build(10, pairs);
}

Graph special_matching_graph(int m) {
  require(m >= 1, "special_matching needs m >= 1");
  Pairs pairs;
  for (int i = 0; i < m; ++i) pairs.emplace_back(vx(2 * i), vx(2 * i + 1));
  for (int i = 1; i < m; ++i) pairs.emplace_back(0, vx(2 * i));
  for (int i = 1; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(vx(2 * i + 1), vx(2 * j + 1));
  }
  return Graph::build(static_cast<std::size_t>(2 * m), pairs);
}

Graph random_graph(int n, double probability, std::uint64_t seed) {
  require(n >= 0, "random needs n >= 0");
  require_probability(probability);
  std::mt19937_64 rng(seed);
  Pairs pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < probability) pairs.emplace_back(vx(i), vx(j));
    }
  }
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

Graph random_bipartite(int a, int b, double probability, std::uint64_t seed) {
  require(a >= 0 && b >= 0, "random_bipartite needs a, b >= 0");
  require_probability(probability);
  std::mt19937_64 rng(seed);
  Pairs pairs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (unit(rng) < probability) pairs.emplace_back(vx(i), vx(a + j));
    }
  }
  return Graph::build(static_cast<std::size_t>(a + b), pairs);
}

namespace {

std::int64_t param(const GeneratorSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw Error(ErrorCode::invalid_argument,
                "family " + spec.family + " needs parameter '" + name + "'");
  }
  if (it->second < -1000000 || it->second > 1000000) {
    throw Error(ErrorCode::domain, "parameter '" + name + "' out of range");
  }
  return it->second;
}

int iparam(const GeneratorSpec& spec, const std::string& name) {
  return static_cast<int>(param(spec, name));
}

std::uint64_t seed_of(const GeneratorSpec& spec) {
  if (!spec.seed) throw Error(ErrorCode::invalid_argument, "family " + spec.family + " needs a seed");
  return *spec.seed;
}

double probability_of(const GeneratorSpec& spec) {
  if (!spec.probability) {
    throw Error(ErrorCode::invalid_argument, "family " + spec.family + " needs a probability");
  }
  return *spec.probability;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "c5_blowup") return c5_blowup(iparam(spec, "t"));
  if (f == "complete_plus_pendants") return complete_plus_pendants(iparam(spec, "q"), iparam(spec, "p"));
  if (f == "bipartite_pendant_extremal") {
    return bipartite_pendant_extremal(iparam(spec, "k"), iparam(spec, "p"));
  }
  if (f == "complete") return complete_graph(iparam(spec, "n"));
  if (f == "complete_bipartite") return complete_bipartite(iparam(spec, "a"), iparam(spec, "b"));
  if (f == "cycle") return cycle_graph(iparam(spec, "n"));
  if (f == "path") return path_graph(iparam(spec, "n"));
  if (f == "star") return star_graph(iparam(spec, "n"));
  if (f == "petersen") return petersen_graph();
  if (f == "special_matching") return special_matching_graph(iparam(spec, "m"));
  if (f == "random") return random_graph(iparam(spec, "n"), probability_of(spec), seed_of(spec));
  if (f == "random_bipartite") {
    return random_bipartite(iparam(spec, "a"), iparam(spec, "b"), probability_of(spec), seed_of(spec));
  }
  throw Error(ErrorCode::invalid_argument, "unknown family '" + f + "'");
}

std::vector<std::string> generator_families() {
  return {"c5_blowup", "complete_plus_pendants", "bipartite_pendant_extremal", "complete",
          "complete_bipartite", "cycle", "path", "star", "petersen", "special_matching",
          "random", "random_bipartite"};
}

namespace {

// Pair (i, j), i < j, in graph6 column order.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace

GraphEnumerator::GraphEnumerator(int n, bool dedup)
    : n_(n), dedup_(dedup), pair_count_(n * (n - 1) / 2) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  if (n > kEnumerationCap) {
    throw Error(ErrorCode::too_large, "enumeration cap: n <= " + std::to_string(kEnumerationCap));
  }
  if (!dedup_) return;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> table(static_cast<std::size_t>(pair_count_));
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        const int a = std::min(perm[i], perm[j]);
        const int b = std::max(perm[i], perm[j]);
        table[pair_index(i, j)] = pair_index(a, b);
      }
    }
    permuted_bit_.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t GraphEnumerator::canonical(std::uint64_t mask) const {
  std::uint64_t best = mask;
  for (const auto& table : permuted_bit_) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      image |= std::uint64_t{1} << table[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    best = std::min(best, image);
  }
  return best;
}

Graph GraphEnumerator::from_mask(int n, std::uint64_t mask) {
  Pairs pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> pair_index(i, j)) & 1) pairs.emplace_back(vx(i), vx(j));
    }
  }
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

std::optional<Graph> GraphEnumerator::next() {
  const std::uint64_t total = total_labeled();
  while (mask_ < total) {
    const std::uint64_t mask = mask_++;
    if (dedup_ && canonical(mask) != mask) continue;
    return from_mask(n_, mask);
  }
  return std::nullopt;
}

}  // namespace sclq
