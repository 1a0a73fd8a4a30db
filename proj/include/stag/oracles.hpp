#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stag/graph.hpp"
#include "stag/spanning_trees.hpp"
#include "stag/stag.hpp"

namespace stag {

inline constexpr int kOracleMaxEdges = 24;
inline constexpr std::size_t kOracleMaxTrees = 2000;
inline constexpr int kOracleMaxPreimageVertices = 7;

/// Every (n-1)-edge subset that is acyclic and spanning, in key order.
/// Throws Error(TooLarge) above kOracleMaxEdges edges.
std::vector<SpanningTree> brute_force_trees(const Graph& g);

/// Pairwise symmetric-difference test over brute_force_trees. Throws
/// Error(TooLarge) above max_trees trees.
StagGraph brute_force_stag(const Graph& g, std::size_t max_trees = kOracleMaxTrees);

/// A connected graph on at most n_max vertices with no K2 block whose STAG is
/// isomorphic to h, scanning every labeled graph. Throws Error(TooLarge) when
/// n_max exceeds kOracleMaxPreimageVertices.
std::optional<Graph> brute_force_is_stag(const Graph& h, int n_max = kOracleMaxPreimageVertices);

}  // namespace stag
