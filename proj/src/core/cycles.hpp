#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace sclq {

/// Cyclically ordered vertices; consecutive vertices (and last, first) are
/// adjacent and all vertices are distinct.
struct CycleWitness {
  std::vector<Vertex> vertices;
};

bool is_valid_cycle(const Graph& g, const CycleWitness& cycle);

/// Some cycle subgraph (chords allowed) on exactly `length` vertices. The
/// search anchors at the smallest vertex of the cycle, tries anchors and
/// neighbors in ascending order, and prunes partial paths that cannot return
/// to the anchor within the remaining budget. Throws for length < 3.
std::optional<CycleWitness> find_cycle_of_length(const Graph& g, std::size_t length);

struct FreenessResult {
  bool free = true;
  std::optional<std::size_t> length;  // first listed length that occurs
  std::optional<CycleWitness> witness;
};

/// Free of every listed cycle length; lengths are checked in the given order.
FreenessResult check_free(const Graph& g, std::span<const std::size_t> lengths);

/// Length of a shortest cycle; absent for forests.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace sclq
