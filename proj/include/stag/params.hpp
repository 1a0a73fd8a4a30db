#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stag/graph.hpp"
#include "stag/stag.hpp"

namespace stag {

inline constexpr std::size_t kDefaultParamMaxTrees = 5000;

struct ParamVerdict {
  std::string name;
  std::string relation;  // e.g. "Delta <= (n-1)(m-n+1)"
  bool applicable = true;
  bool holds = true;
  long long lhs = 0;
  long long rhs = 0;
  long long slack = 0;  // distance from the bound; 0 when tight or an equality
};

struct ParamReport {
  int n = 0;
  int m = 0;
  int aux_vertices = 0;
  int aux_edges = 0;
  int min_degree_aux = 0;
  int max_degree_aux = 0;
  int diameter_aux = 0;
  int exchange_diameter = 0;  // max over tree pairs of |T xor T'| / 2
  int clique_number_aux = 0;
  std::optional<int> circumference;
  std::optional<int> max_minimal_cut;
  std::vector<ParamVerdict> verdicts;

  bool all_hold() const;
};

/// Eccentricity maximum by BFS from every vertex. Throws Error(Disconnected).
int graph_diameter(const Graph& h);

/// Max |T xor T'| / 2 over all tree pairs of an annotated STAG.
int exchange_diameter(const StagGraph& s);

/// Degree, diameter and clique-number relations between g and Aux(g).
ParamReport param_report(const Graph& g, std::size_t max_trees = kDefaultParamMaxTrees,
                         int max_n = 12);

std::string report_to_json(const ParamReport& r);
std::string report_to_text(const ParamReport& r);

}  // namespace stag
