#include "stag/graph.hpp"

#include <algorithm>
#include <functional>

#include "stag/error.hpp"

namespace stag {

Graph::Graph(int vertex_count) {
  for (int v = 0; v < vertex_count; ++v) add_vertex(std::to_string(v));
}

Graph::Graph(std::vector<std::string> names) {
  for (auto& name : names) add_vertex(std::move(name));
}

VertexId Graph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loop at " + name(u));
  if (find_edge(u, v))
    throw Error(ErrorKind::InvalidArgument, "duplicate edge " + name(u) + " " + name(v));
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, u, v});
  adjacency_[static_cast<std::size_t>(u)].push_back(Incidence{v, id});
  adjacency_[static_cast<std::size_t>(v)].push_back(Incidence{u, id});
  return id;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  // scan the shorter incidence list
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const auto& inc : incident(u))
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

std::vector<std::vector<VertexId>> Graph::sorted_neighbors() const {
  std::vector<std::vector<VertexId>> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    out[v].reserve(adjacency_[v].size());
    for (const auto& inc : adjacency_[v]) out[v].push_back(inc.neighbor);
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(adjacency_.size());
  for (const auto& a : adjacency_) d.push_back(static_cast<int>(a.size()));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_count() == other.vertex_count() && edges_ == other.edges_;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace stag
