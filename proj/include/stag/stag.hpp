#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stag/graph.hpp"
#include "stag/spanning_trees.hpp"

namespace stag {

/// Spanning tree auxiliary graph. Vertex i of `graph` is named "i". When built
/// from a known host, trees[i] is its spanning tree (sorted by key) and
/// `origin` holds the host; recognition inputs carry neither.
struct StagGraph {
  Graph graph;
  std::vector<SpanningTree> trees;
  std::optional<Graph> origin;

  bool annotated() const { return origin.has_value(); }
  int vertex_count() const { return graph.vertex_count(); }
};

/// Vertices are all spanning trees of g in key order; edges come from Type II
/// exchanges. Throws Error(TooManyTrees), Error(Disconnected).
StagGraph build_stag(const Graph& g, std::size_t max_trees = kDefaultMaxTrees);

/// Wraps an arbitrary graph as an unannotated STAG candidate.
StagGraph unannotated_stag(Graph h);

/// Vertex of an annotated STAG holding tree t, if any.
std::optional<VertexId> find_tree(const StagGraph& s, const SpanningTree& t);

struct NeighborClass {
  EdgeId key;  // deleted tree edge (cut class) or added non-tree edge (cycle class)
  std::vector<VertexId> members;
};

struct NeighborhoodPartitions {
  std::vector<NeighborClass> cut_classes;    // one per tree edge, may be empty (bridges)
  std::vector<NeighborClass> cycle_classes;  // one per non-tree edge
};

/// Ground-truth split of N(v) by exchanged edge. Throws Error(Unannotated).
NeighborhoodPartitions neighborhood_partitions(const StagGraph& s, VertexId v);

enum class CliqueTag { Cycle, Cut, Undetermined };

struct CliqueClass {
  std::vector<VertexId> members;  // ascending
  CliqueTag tag = CliqueTag::Undetermined;

  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const CliqueClass&) const = default;
};

/// Every cycle clique (a cycle with a forest completing it, one tree per omitted
/// cycle edge) and every cut clique of size >= 2 (a bond with a forest spanning
/// both sides, one tree per bond edge), deduplicated and sorted by members.
/// Throws Error(Unannotated).
std::vector<CliqueClass> ground_truth_cliques(const StagGraph& s);

/// Bron-Kerbosch with pivoting over a degeneracy order. Each clique ascending,
/// list sorted.
std::vector<std::vector<VertexId>> maximal_cliques(const Graph& h);

/// {"vertices": [tree edge-id lists or null], "edges": [[i, j], ...]}
std::string stag_to_json(const StagGraph& s);
/// DOT with tree labels as vertex tooltips.
std::string stag_to_dot(const StagGraph& s);

}  // namespace stag
