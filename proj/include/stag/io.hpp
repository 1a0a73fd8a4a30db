#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stag/graph.hpp"

namespace stag {

enum class GraphFormat { EdgeList, Json, Dot };

/// Parses an edge list ("u v" per line; '#' comments and blank lines skipped)
/// or a JSON object {"vertices": [...], "edges": [[u, v], ...]}.
///
/// Vertices are numbered in first-appearance order and edge ids follow input
/// order. An edge-list line holding a single token declares an isolated
/// vertex, which is the only way to spell the one-vertex graph in that format.
/// JSON vertex entries may be strings or numbers (used as names) or anything
/// else, e.g. the tree lists of a serialized STAG, in which case the vertex is
/// named by its index. JSON endpoints are matched by name first, then by index.
///
/// Throws ParseError on malformed tokens, self-loops, duplicate edges and the
/// empty graph.
Graph parse_graph(std::string_view text, GraphFormat format);

GraphFormat format_from_path(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);

std::string to_edge_list(const Graph& g);
std::string to_json(const Graph& g);

/// DOT export: vertex name = original token, edge label = edge id. Optional
/// per-vertex tooltips (same length as the vertex list) are emitted verbatim.
std::string to_dot(const Graph& g, const std::vector<std::string>& tooltips = {});

std::string serialize(const Graph& g, GraphFormat format);
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace stag
