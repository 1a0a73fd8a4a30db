#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stag {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Labeled simple undirected graph. Vertex ids are dense (0..n-1) and keep the
/// original token as a display name; edge ids are dense (0..m-1) in insertion
/// order. Values are immutable once built and cheap to copy at desk scale.
class Graph {
 public:
  Graph() = default;
  /// n vertices named "0".."n-1", no edges.
  explicit Graph(int vertex_count);
  explicit Graph(std::vector<std::string> names);

  VertexId add_vertex(std::string name);
  /// Throws Error(InvalidArgument) on a self-loop, a duplicate pair, or an
  /// out-of-range endpoint.
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  const std::string& name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Sorted neighbor ids of every vertex.
  std::vector<std::vector<VertexId>> sorted_neighbors() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

}  // namespace stag
