#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stag/graph.hpp"

namespace stag {

/// One consistent reading of N(x) as a cut partition and a cycle partition.
/// Classes are ascending and sorted by first member.
struct NeighborhoodOption {
  std::vector<std::vector<VertexId>> cut_classes;
  std::vector<std::vector<VertexId>> cycle_classes;

  int n() const { return static_cast<int>(cut_classes.size()) + 1; }
  int m() const { return static_cast<int>(cycle_classes.size()) + n() - 1; }
  bool operator==(const NeighborhoodOption&) const = default;
};

struct InferredParams {
  int n = 0;
  int m = 0;
  VertexId anchor = 0;
  /// Options at every vertex that agree with (n, m).
  std::vector<std::vector<NeighborhoodOption>> per_vertex;
};

struct LabeledTreeEdge {
  int cut_clique_id = 0;
  std::vector<int> label;  // ascending cycle-clique ids
  bool operator==(const LabeledTreeEdge&) const = default;
};

/// items[i] sits on edges[i]; vertices are 0..n-1.
struct ExplicitTree {
  int n = 0;
  std::vector<LabeledTreeEdge> items;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

/// The unique maximal clique containing a clique seed of two or more vertices.
/// Throws Error(InvalidArgument) if the seed is not a clique and
/// Error(NotAStag) if the common neighbors of the seed are not a clique.
std::vector<VertexId> extend_to_maximal_clique(const Graph& h, const std::vector<VertexId>& seed);

/// Every double partition of N(x) compatible with the clique structure, in
/// (n, m, classes) order. Throws Error(NotAStag) when there is none and
/// Error(TooLarge) past 2^12 role assignments.
std::vector<NeighborhoodOption> neighborhood_options(const Graph& h, VertexId x);

/// First entry of neighborhood_options.
NeighborhoodOption recover_neighborhood_partitions(const Graph& h, VertexId x);

/// Every (n, m) on which all vertices agree, ascending. Throws Error(NotAStag)
/// when the vertices share none.
std::vector<InferredParams> infer_param_candidates(const Graph& h);

/// Smallest candidate of infer_param_candidates.
InferredParams infer_params(const Graph& h);

/// n - 1 items, one per cut class, labeled by the cycle classes they meet.
/// Throws Error(NotAStag) when two cycle ids label the same edge set.
std::vector<LabeledTreeEdge> label_cut_cliques(const NeighborhoodOption& option);
std::vector<LabeledTreeEdge> label_cut_cliques(const InferredParams& params, VertexId x);

/// True iff, for every cycle id, the edges carrying it form a simple path.
bool layout_is_consistent(const ExplicitTree& t);

inline constexpr std::size_t kDefaultLayoutBudget = 20'000'000;

/// Calls visit on each consistent layout until it returns true. Returns
/// whether a visit accepted. Throws Error(TooLarge) past the node budget.
bool for_each_layout(const std::vector<LabeledTreeEdge>& items, int n,
                     const std::function<bool(const ExplicitTree&)>& visit,
                     std::size_t node_budget = kDefaultLayoutBudget);

/// First consistent layout. Throws Error(NotAStag) when there is none.
ExplicitTree layout_tree(const std::vector<LabeledTreeEdge>& items, int n);

/// Tree edges in item order, then one chord per cycle id joining the ends of
/// its path. Throws Error(NotAStag) if the result would not be simple.
Graph add_chords(const ExplicitTree& t);

/// 2-connected preimage of a prime candidate. K1 maps to the one-vertex graph
/// and K_k (k >= 3) to C_k. Throws Error(NotAStag).
Graph invert_prime(const Graph& h);

/// Minimal preimage: factorize, invert each factor, glue the blocks at their
/// lowest vertices, then check Aux(result) against h. Throws Error(NotAStag).
Graph invert(const Graph& h);

struct InversionVerdict {
  bool is_stag = false;
  int n = 0;
  int m = 0;
  int factors = 0;
  std::string verification;  // "iso" or "failed"
  std::string reason;
  std::optional<Graph> preimage;
};

/// invert without throwing on NotAStag.
InversionVerdict try_invert(const Graph& h);

/// g_min with pendant paths of length 1, 2, ... attached at each vertex in
/// turn, up to budget graphs. Throws Error(NotMinimal) if g_min has a bridge.
std::vector<Graph> enumerate_preimages(const Graph& g_min, std::size_t budget);

}  // namespace stag
