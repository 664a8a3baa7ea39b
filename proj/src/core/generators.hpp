#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace sclq {

// Extremal families. Core vertices come first in construction order, then
// pendant vertices grouped by the core vertex they hang from.

/// C_5 with every vertex replaced by an independent set of size t and every
/// edge by a complete join. Part i holds vertices i*t .. i*t+t-1.
Graph c5_blowup(int t);

/// K_q with p pendant leaves on every clique vertex.
Graph complete_plus_pendants(int q, int p);

/// K_{k-1, p+k-1} with p pendant leaves on the first vertex of the larger
/// side. Vertices 0..k-2 form the smaller side.
Graph bipartite_pendant_extremal(int k, int p);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

/// Graph of an x_1-special matching of size m: vertices 2i, 2i+1 are x_{i+1},
/// x_{i+1}'; the matching is edge ids 0..m-1, x_1 = vertex 0.
Graph special_matching_graph(int m);

/// Edge {i, j} (i < j, lexicographic pair order) is kept when the next
/// mt19937_64 output, scaled to [0, 1) by its top 53 bits, is below
/// `probability`. Identical (parameters, seed) give identical graphs.
Graph random_graph(int n, double probability, std::uint64_t seed);

/// Sides 0..a-1 and a..a+b-1; pairs (i, a+j) in lexicographic order, drawn as
/// in random_graph.
Graph random_bipartite(int a, int b, double probability, std::uint64_t seed);

struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::optional<std::uint64_t> seed;
  std::optional<double> probability;
};

/// Families: c5_blowup{t}, complete_plus_pendants{q,p},
/// bipartite_pendant_extremal{k,p}, complete{n}, complete_bipartite{a,b},
/// cycle{n}, path{n}, star{n}, petersen, special_matching{m},
/// random{n} + probability + seed, random_bipartite{a,b} + probability + seed.
Graph generate(const GeneratorSpec& spec);
std::vector<std::string> generator_families();

inline constexpr int kEnumerationCap = 8;

/// Streams every labeled graph on n vertices in ascending adjacency-mask
/// order (bit k is the k-th pair in graph6 column order). With dedup, only
/// the graphs whose mask is the minimum over all n! relabelings are kept:
/// one representative per isomorphism class.
class GraphEnumerator {
 public:
  GraphEnumerator(int n, bool dedup);

  std::optional<Graph> next();
  std::uint64_t position() const { return mask_; }
  std::uint64_t total_labeled() const { return std::uint64_t{1} << pair_count_; }

  /// Smallest mask over all vertex relabelings.
  std::uint64_t canonical(std::uint64_t mask) const;

  static Graph from_mask(int n, std::uint64_t mask);

 private:
  int n_;
  bool dedup_;
  int pair_count_;
  std::uint64_t mask_ = 0;
  std::vector<std::vector<int>> permuted_bit_;  // [perm][bit] -> new bit
};

}  // namespace sclq
