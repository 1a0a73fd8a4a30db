#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stag/graph.hpp"
#include "stag/io.hpp"

namespace stag::testing {

inline const std::map<std::string, std::string>& fixture_texts() {
  static const std::map<std::string, std::string> texts = {
      {"C3", "a b\nb c\na c\n"},
      {"C4", "a b\nb c\nc d\nd a\n"},
      {"C5", "a b\nb c\nc d\nd e\ne a\n"},
      {"P3", "a b\nb c\n"},
      {"K4", "a b\na c\na d\nb c\nb d\nc d\n"},
      {"diamond", "a b\na c\nb c\nb d\nc d\n"},
      {"theta", "a x\nx b\na y\ny b\na z\nz b\n"},
      {"bowtie", "a b\nb c\na c\nc d\nd e\nc e\n"},
      {"tri_pendant", "a b\nb c\na c\nc d\n"},
      {"K5", "a b\na c\na d\na e\nb c\nb d\nb e\nc d\nc e\nd e\n"},
      {"petersen",
       "0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n"},
  };
  return texts;
}

inline Graph fixture(const std::string& name) { return parse_graph(fixture_texts().at(name), GraphFormat::EdgeList); }

inline Graph edge_list(std::string_view text) { return parse_graph(text, GraphFormat::EdgeList); }

/// The construction fixture set.
inline std::vector<std::string> construction_fixtures() {
  return {"C3", "C4", "C5", "P3", "K4", "diamond", "theta", "bowtie", "tri_pendant"};
}

/// Fixtures without a K2 block.
inline std::vector<std::string> minimal_preimage_fixtures() {
  return {"C3", "C4", "C5", "K4", "diamond", "theta", "bowtie", "K5"};
}

// Frozen from tests/tools/derive_fixture_values.py (networkx subset scan).
struct Expected {
  int trees;
  int aux_edges;
  int min_degree;
  int max_degree;
  int diameter;
  int clique_number;
  std::vector<int> minimal_cut_sizes;
};

inline const std::map<std::string, Expected>& expected_values() {
  static const std::map<std::string, Expected> values = {
      {"C3", {3, 3, 2, 2, 1, 3, {2, 2, 2}}},
      {"C4", {4, 6, 3, 3, 1, 4, {2, 2, 2, 2, 2, 2}}},
      {"C5", {5, 10, 4, 4, 1, 5, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}}},
      {"P3", {1, 0, 0, 0, 0, 1, {1, 1}}},
      {"K4", {16, 54, 6, 7, 3, 4, {3, 3, 3, 3, 4, 4, 4}}},
      {"diamond", {8, 18, 4, 5, 2, 4, {2, 2, 3, 3, 3, 3}}},
      {"theta", {12, 36, 6, 6, 2, 4, {2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3}}},
      {"bowtie", {9, 18, 4, 4, 2, 3, {2, 2, 2, 2, 2, 2}}},
      {"tri_pendant", {3, 3, 2, 2, 1, 3, {1, 2, 2, 2}}},
      {"K5", {125, 930, 12, 16, 4, 6, {4, 4, 4, 4, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6}}},
  };
  return values;
}

inline EdgeId edge_between(const Graph& g, std::string_view a, std::string_view b) {
  VertexId u = -1, v = -1;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.name(x) == a) u = x;
    if (g.name(x) == b) v = x;
  }
  return *g.find_edge(u, v);
}

}  // namespace stag::testing
