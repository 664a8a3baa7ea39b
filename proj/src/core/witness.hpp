#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/cycles.hpp"
#include "core/graph.hpp"
#include "core/matching.hpp"

namespace sclq {

/// Digraph with at least one arc between every pair of distinct vertices.
class SemiCompleteDigraph {
 public:
  explicit SemiCompleteDigraph(std::size_t size)
      : size_(size), arcs_(size * size, false) {}

  std::size_t size() const { return size_; }
  bool has_arc(std::size_t from, std::size_t to) const { return arcs_[from * size_ + to]; }
  void add_arc(std::size_t from, std::size_t to);

  bool is_semicomplete() const;

  /// Reachability-closure strong connectivity; the empty and single-vertex
  /// digraphs count as strong.
  bool is_strongly_connected() const;

  /// Strong components listed source-first: every arc between two different
  /// components points from the earlier one to the later one.
  std::vector<std::vector<std::size_t>> ordered_components() const;

 private:
  std::size_t size_;
  std::vector<bool> arcs_;
};

/// A matching edge split by sides: x[i] lies in the bipartition's x side.
/// Index i follows ascending edge id.
struct OrientedMatching {
  std::vector<EdgeId> edges;
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

OrientedMatching orient(const Graph& g, const Matching& m, const Bipartition& sides);

/// Arc (i, j) iff x_i y_j is an edge. Requires g bipartite with the given
/// sides and M a strong clique of g ("distance > 2 pair" otherwise).
SemiCompleteDigraph auxiliary_digraph(const Graph& g, const Matching& m, const Bipartition& sides);

/// Directed Hamiltonian path by insertion: vertices are processed in id
/// order and each goes to the first position keeping every consecutive arc
/// valid. Throws precondition when the digraph is not semicomplete.
std::vector<std::size_t> semicomplete_hamiltonian_path(const SemiCompleteDigraph& d);

/// Walk on vertices with its edge ids (edges[i] joins vertices[i], vertices[i+1]).
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

bool is_valid_path(const Graph& g, const PathWitness& path);

/// Path y_1 x_1 y_2 x_2 ... y_m x_m on 2m vertices through every edge of M,
/// inside G[V(M)]. Requires g bipartite and M a nonempty strong-clique matching.
PathWitness lemma21_path(const Graph& g, const Matching& m);

struct Lemma21Cycle {
  CycleWitness cycle;
  std::size_t matching_edges_used = 0;
  bool digraph_strong = false;
};

/// Cycle on 2m - 2 vertices inside G[V(M)] using at least m - 2 edges of M.
/// Built from a directed (m-1)-cycle of the auxiliary digraph when it is
/// strong, else from a source-to-sink Hamiltonian path closed by an arc.
/// Requires m >= 4 ("m must be at least 4").
Lemma21Cycle lemma21_cycle(const Graph& g, const Matching& m);

struct MinimalReduction {
  Subgraph reduced;
  std::vector<EdgeId> s_edges;  // ids in the reduced graph, ascending
};

/// Deletes, to a fixpoint, any vertex (ascending) and then any non-S edge
/// (ascending) whose removal keeps S a strong clique. The result is
/// S-minimal; a different order may give a different minimal graph.
MinimalReduction s_minimal_reduce(const Graph& g, std::span<const EdgeId> s);

struct PropertyOutcome {
  bool evaluated = false;
  bool pass = true;
  std::vector<std::uint32_t> counterexample;  // vertices or edge ids, see detail
  std::string detail;
};

/// Checks of an S-minimal graph: every vertex touches S; diameter at most 3;
/// every non-S edge uv is the only edge between some uu', vv' in S; and, for
/// a maximum S, every non-S edge is at distance >= 3 from some edge of S.
struct MinimalPropertyReport {
  PropertyOutcome covers_vertices;
  PropertyOutcome diameter_at_most_three;
  PropertyOutcome unique_link;
  PropertyOutcome far_edge;

  bool all_pass() const {
    return covers_vertices.pass && diameter_at_most_three.pass && unique_link.pass && far_edge.pass;
  }
};

MinimalPropertyReport check_minimal_properties(const Graph& g, std::span<const EdgeId> s,
                                               bool s_is_maximum);

/// x-special: with x_1 = x, x is adjacent to every other x_i, the partners
/// x_i' (i >= 2) are pairwise adjacent, and no other pair of V(M) is adjacent.
bool is_x_special(const Graph& g, const Matching& m, Vertex x);
bool is_special(const Graph& g, const Matching& m);

/// (x, M)-path: a path in G[V(M)] from x whose last edge is not in M and
/// which contains every M-edge spanned by its vertices.
bool is_valid_xm_path(const Graph& g, const Matching& m, Vertex x, const PathWitness& path);

/// Backtracking search, neighbors ascending. Lengths above 2|M| - 1 are
/// absent. Throws for an unmatched x or length 0.
std::optional<PathWitness> find_xm_path(const Graph& g, const Matching& m, Vertex x,
                                        std::size_t length);

}  // namespace sclq
