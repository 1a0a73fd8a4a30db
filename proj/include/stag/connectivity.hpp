#pragma once

#include <utility>
#include <vector>

#include "stag/graph.hpp"

namespace stag {

inline constexpr int kDefaultMaxN = 12;

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Maximal 2-connected subgraph. Local ids are dense; the host maps are
/// ascending, so local edge i is host edge host_edges[i].
struct Block {
  Graph graph;
  std::vector<VertexId> host_vertices;
  std::vector<EdgeId> host_edges;
};

struct BlockDecomposition {
  std::vector<Block> blocks;           // ordered by smallest host edge id
  std::vector<VertexId> cut_vertices;  // ascending host ids
  /// Incidences of the bipartite block-cutpoint tree: (block index, cut vertex).
  std::vector<std::pair<int, VertexId>> block_cut_tree;
};

/// Iterative Hopcroft-Tarjan. The one-vertex graph yields a single K1 block.
/// Throws Error(Disconnected).
BlockDecomposition block_decomposition(const Graph& g);

/// Connected and either K2 or (n >= 3 and free of cut vertices).
bool is_two_connected(const Graph& g);

std::vector<EdgeId> bridges(const Graph& g);

/// Classes of "lies on a common cycle", computed by merging fundamental cycles
/// of a BFS tree. Classes are ascending, ordered by their smallest edge id.
/// Throws Error(HasBridge) naming the first bridge, Error(Disconnected).
std::vector<std::vector<EdgeId>> common_cycle_classes(const Graph& g);

struct EdgeCut {
  std::vector<EdgeId> edge_ids;  // ascending
  std::vector<VertexId> side_a;  // contains vertex 0
  std::vector<VertexId> side_b;
};

/// All inclusion-minimal edge cuts (bonds), by enumerating bipartitions whose
/// sides both induce connected subgraphs. Sorted by edge-id list.
/// Throws Error(TooLarge) when n > max_n, Error(Disconnected).
std::vector<EdgeCut> minimal_edge_cuts(const Graph& g, int max_n = kDefaultMaxN);

/// Longest simple cycle length, exact via a subset DP over paths.
/// Throws Error(Acyclic) for forests, Error(TooLarge) when n > max_n.
int circumference(const Graph& g, int max_n = kDefaultMaxN);

}  // namespace stag
