#include "stag/product.hpp"

namespace stag {

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n2 = g2.vertex_count();
  Graph out;
  for (VertexId a = 0; a < g1.vertex_count(); ++a)
    for (VertexId b = 0; b < n2; ++b) out.add_vertex("(" + g1.name(a) + "," + g2.name(b) + ")");
  for (VertexId a = 0; a < g1.vertex_count(); ++a)
    for (const auto& e : g2.edges()) out.add_edge(a * n2 + e.u, a * n2 + e.v);
  for (const auto& e : g1.edges())
    for (VertexId b = 0; b < n2; ++b) out.add_edge(e.u * n2 + b, e.v * n2 + b);
  return out;
}

}  // namespace stag
