#pragma once

#include <cstddef>
#include <vector>

#include "stag/graph.hpp"
#include "stag/spanning_trees.hpp"
#include "stag/stag.hpp"

namespace stag {

inline constexpr int kDefaultMaxFactorVertices = 4096;

/// Prime factors under the Cartesian product plus, for every input vertex,
/// its coordinate tuple (coordinates[v][i] is a vertex of factors[i]). K1 is
/// the unit and never appears; an empty factor list means the input is K1.
struct Factorization {
  std::vector<Graph> factors;
  std::vector<std::vector<VertexId>> coordinates;
};

/// Iterated product, left to right. K1 for an empty list.
Graph product_of(const std::vector<Graph>& factors);

/// True iff the coordinates carry g isomorphically onto product_of(factors).
bool verify_factorization(const Graph& g, const Factorization& f);

/// Factors are emitted by descending vertex count; ties by edge count, degree
/// sequence, then edge-list text. Factor vertices are named after the input
/// vertices of the layer through vertex 0.
///
/// Throws Error(Disconnected), Error(TooLarge) above max_vertices, and
/// Error(ValidationFailed) if the product check ever fails.
Factorization prime_factorize(const Graph& g, int max_vertices = kDefaultMaxFactorVertices);

/// K1 counts as prime. Throws Error(Disconnected).
bool is_prime(const Graph& g);

/// Product of the STAGs of the blocks of g, as an unannotated STAG with
/// vertices renamed "0".."N-1".
StagGraph product_of_block_stags(const Graph& g, std::size_t max_trees = kDefaultMaxTrees);

}  // namespace stag
