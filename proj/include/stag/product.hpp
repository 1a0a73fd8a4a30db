#pragma once

#include "stag/graph.hpp"

namespace stag {

/// Cartesian product. Vertex (a, b) gets id a * n2 + b and the name "(a,b)"
/// built from the factor names. Edges: first every g2-edge copy per g1 vertex,
/// then every g1-edge copy per g2 vertex.
Graph cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace stag
