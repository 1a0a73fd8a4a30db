#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stag/graph.hpp"

namespace stag {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultMaxTrees = 100000;

/// Spanning tree of some host graph as its sorted edge-id list. The sorted list
/// is the canonical key: equality and ordering are by key.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<EdgeId> edges);

  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(EdgeId e) const;

  /// Copy with `removed` replaced by `added`.
  SpanningTree exchange(EdgeId removed, EdgeId added) const;

  auto operator<=>(const SpanningTree&) const = default;

 private:
  std::vector<EdgeId> edges_;
};

struct SpanningTreeHash {
  std::size_t operator()(const SpanningTree& t) const noexcept;
};

/// "t: id1,id2,..."
std::string format_tree(const SpanningTree& t);

bool is_spanning_tree(const Graph& g, const SpanningTree& t);

/// Matrix-Tree theorem: a Laplacian cofactor by fraction-free (Bareiss)
/// elimination in exact integers. Zero for disconnected graphs.
BigInt count_spanning_trees(const Graph& g);

/// Deterministic DFS tree from vertex 0, exploring incidences in id order.
SpanningTree dfs_spanning_tree(const Graph& g);

/// All spanning trees, sorted by key. Breadth-first walk over Type II
/// exchanges from the DFS tree. Throws Error(TooManyTrees) when the Kirchhoff
/// count exceeds max_trees and Error(Disconnected).
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   std::size_t max_trees = kDefaultMaxTrees);

/// Unique cycle of t + e, starting with e and then walking the tree path from
/// e's second endpoint back to its first. Throws Error(EdgeInTree).
std::vector<EdgeId> fundamental_cycle(const Graph& g, const SpanningTree& t, EdgeId e);

/// Edges of g crossing the two sides of t - f, including f itself, ascending.
/// Throws Error(InvalidArgument) unless f is a tree edge.
std::vector<EdgeId> fundamental_cut(const Graph& g, const SpanningTree& t, EdgeId f);

/// Add a non-tree edge, drop another edge of the cycle it closes.
std::vector<SpanningTree> type1_neighbors(const Graph& g, const SpanningTree& t);
/// Drop a tree edge, reconnect the two sides with a different crossing edge.
std::vector<SpanningTree> type2_neighbors(const Graph& g, const SpanningTree& t);

/// A non-tree edge whose fundamental cycle holds both e1 and e2, scanning in
/// ascending id order. Throws Error(NotTwoConnected) unless g is 2-connected and
/// not K2, Error(InvalidArgument) unless e1 != e2 are both tree edges, and
/// Error(NoWitness) when no such edge exists.
EdgeId witness_edge_for_pair(const Graph& g, const SpanningTree& t, EdgeId e1, EdgeId e2);

/// Whether the subgraph of live edges (all edges when `alive` is empty) has a
/// simple cycle through both e1 and e2. Menger: two vertex-disjoint paths
/// joining the endpoint pairs once e1 and e2 are removed.
bool cycle_through_both(const Graph& g, EdgeId e1, EdgeId e2, const std::vector<bool>& alive = {});

struct ReverseDeleteResult {
  SpanningTree tree;
  std::vector<EdgeId> trace;  // deleted edges in deletion order
};

/// Reverse of Kruskal on an unweighted graph: scan edges in ascending id and
/// delete every edge still lying on a cycle. With a protected pair (g must be
/// 2-connected), e1 and e2 are never deleted and an edge is deferred while its
/// deletion would leave no cycle through both, so the last deletion is made on
/// a cycle containing e1 and e2. Throws Error(Disconnected),
/// Error(NotTwoConnected) for a protected pair on a graph that is not 2-connected.
ReverseDeleteResult reverse_delete_tree(const Graph& g,
                                        std::optional<std::pair<EdgeId, EdgeId>> protected_pair = {});

}  // namespace stag
