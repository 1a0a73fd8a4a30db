#pragma once

#include <optional>
#include <vector>

#include "stag/graph.hpp"

namespace stag {

struct IsomorphismLimits {
  int max_vertices = 5000;
  long max_search_nodes = 200000;
};

/// Color refinement over the disjoint union plus individualization and
/// backtracking. On success returns the witness: mapping[v] is the image in g2
/// of vertex v of g1. Throws Error(TooLarge) beyond the limits.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                      const IsomorphismLimits& limits = {});

inline bool are_isomorphic(const Graph& g1, const Graph& g2, const IsomorphismLimits& limits = {}) {
  return find_isomorphism(g1, g2, limits).has_value();
}

/// True iff mapping is a bijection carrying the edges of g1 onto those of g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<VertexId>& mapping);

}  // namespace stag
