#include "stag/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/io.hpp"
#include "stag/isomorphism.hpp"
#include "stag/product.hpp"

namespace stag {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Edge lookup by endpoint pair over sorted neighbor rows.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : rows_(static_cast<std::size_t>(g.vertex_count())) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto& row = rows_[static_cast<std::size_t>(v)];
      for (const auto& inc : g.incident(v)) row.emplace_back(inc.neighbor, inc.edge);
      std::sort(row.begin(), row.end());
    }
  }
  EdgeId at(VertexId u, VertexId v) const {
    const auto& row = rows_[static_cast<std::size_t>(u)];
    return std::lower_bound(row.begin(), row.end(), std::make_pair(v, -1))->second;
  }

 private:
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> rows_;
};

// Local relation: incident edges sharing a triangle, or not spanning exactly
// one chordless square, belong to the same factor; opposite edges of a
// chordless square belong to the same factor.
void local_relation(const Graph& g, UnionFind& uf) {
  const auto nb = g.sorted_neighbors();
  const EdgeIndex index(g);
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto& row = nb[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        const VertexId v = row[i], w = row[j];
        const EdgeId uv = index.at(u, v), uw = index.at(u, w);
        const auto& nv = nb[static_cast<std::size_t>(v)];
        if (std::binary_search(nv.begin(), nv.end(), w)) {
          uf.unite(uv, uw);
          continue;
        }
        const auto& nw = nb[static_cast<std::size_t>(w)];
        common.clear();
        std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(common));
        common.erase(std::remove(common.begin(), common.end(), u), common.end());
        if (common.size() != 1 || std::binary_search(row.begin(), row.end(), common[0])) {
          uf.unite(uv, uw);
          continue;
        }
        const VertexId x = common[0];
        uf.unite(uv, index.at(w, x));
        uf.unite(uw, index.at(v, x));
      }
    }
  }
}

// Djokovic-Winkler: xy ~ uv iff d(x,u) + d(y,v) != d(x,v) + d(y,u). Together
// with the local relation its transitive closure is the product relation.
void djokovic_winkler(const Graph& g, UnionFind& uf) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::uint16_t> dist(n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::queue<VertexId> q;
    q.push(static_cast<VertexId>(s));
    seen[s] = true;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (seen[w]) continue;
        seen[w] = true;
        dist[s * n + w] = static_cast<std::uint16_t>(dist[s * n + static_cast<std::size_t>(v)] + 1);
        q.push(inc.neighbor);
      }
    }
  }
  auto d = [&](VertexId a, VertexId b) {
    return static_cast<int>(dist[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]);
  };
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (uf.find(edges[i].id) == uf.find(edges[j].id)) continue;
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u)) uf.unite(e.id, f.id);
    }
  }
}

// Tries the edge grouping as a product decomposition: each group's factor is
// read off the components of the graph without that group's edges.
std::optional<Factorization> decompose(const Graph& g, const std::vector<int>& group, int groups) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Factorization f;
  f.coordinates.assign(n, std::vector<VertexId>(static_cast<std::size_t>(groups), -1));
  std::vector<std::vector<std::pair<VertexId, VertexId>>> factor_edges(static_cast<std::size_t>(groups));
  std::vector<int> sizes(static_cast<std::size_t>(groups), 0);

  for (int i = 0; i < groups; ++i) {
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (f.coordinates[s][static_cast<std::size_t>(i)] != -1) continue;
      std::vector<VertexId> stack{static_cast<VertexId>(s)};
      f.coordinates[s][static_cast<std::size_t>(i)] = next;
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v)) {
          if (group[static_cast<std::size_t>(inc.edge)] == i) continue;
          auto& c = f.coordinates[static_cast<std::size_t>(inc.neighbor)][static_cast<std::size_t>(i)];
          if (c != -1) continue;
          c = next;
          stack.push_back(inc.neighbor);
        }
      }
      ++next;
    }
    sizes[static_cast<std::size_t>(i)] = next;
  }

  std::size_t product = 1;
  for (int s : sizes) {
    product *= static_cast<std::size_t>(s);
    if (product > n) return std::nullopt;
  }
  if (product != n) return std::nullopt;

  for (const auto& e : g.edges()) {
    const auto i = static_cast<std::size_t>(group[static_cast<std::size_t>(e.id)]);
    VertexId a = f.coordinates[static_cast<std::size_t>(e.u)][i];
    VertexId b = f.coordinates[static_cast<std::size_t>(e.v)][i];
    if (a == b) return std::nullopt;
    if (a > b) std::swap(a, b);
    factor_edges[i].emplace_back(a, b);
  }
  std::size_t edge_total = 0;
  for (std::size_t i = 0; i < factor_edges.size(); ++i) {
    auto& fe = factor_edges[i];
    std::sort(fe.begin(), fe.end());
    fe.erase(std::unique(fe.begin(), fe.end()), fe.end());
    edge_total += fe.size() * (n / static_cast<std::size_t>(sizes[i]));
  }
  if (edge_total != static_cast<std::size_t>(g.edge_count())) return std::nullopt;

  auto tuples = f.coordinates;
  std::sort(tuples.begin(), tuples.end());
  if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end()) return std::nullopt;

  // name factor vertices after the layer through vertex 0
  std::map<std::vector<VertexId>, VertexId> by_tuple;
  for (std::size_t v = 0; v < n; ++v) by_tuple.emplace(f.coordinates[v], static_cast<VertexId>(v));
  for (int i = 0; i < groups; ++i) {
    Graph factor;
    auto probe = f.coordinates[0];
    for (int c = 0; c < sizes[static_cast<std::size_t>(i)]; ++c) {
      probe[static_cast<std::size_t>(i)] = c;
      factor.add_vertex(g.name(by_tuple.at(probe)));
    }
    for (const auto& [a, b] : factor_edges[static_cast<std::size_t>(i)]) factor.add_edge(a, b);
    f.factors.push_back(std::move(factor));
  }
  return f;
}

Factorization canonical_order(Factorization f) {
  const std::size_t k = f.factors.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::tuple<int, int, std::vector<int>, std::string>> keys;
  for (const auto& g : f.factors)
    keys.emplace_back(-g.vertex_count(), -g.edge_count(), g.degree_sequence(), to_edge_list(g));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Factorization out;
  for (std::size_t i : order) out.factors.push_back(std::move(f.factors[i]));
  for (auto& c : f.coordinates) {
    std::vector<VertexId> row;
    for (std::size_t i : order) row.push_back(c[i]);
    out.coordinates.push_back(std::move(row));
  }
  return out;
}

std::optional<Factorization> decompose_classes(const Graph& g, UnionFind& uf) {
  std::vector<int> group(static_cast<std::size_t>(g.edge_count()));
  std::map<int, int> dense;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [it, fresh] = dense.emplace(uf.find(e), static_cast<int>(dense.size()));
    group[static_cast<std::size_t>(e)] = it->second;
  }
  return decompose(g, group, static_cast<int>(dense.size()));
}

}  // namespace

Graph product_of(const std::vector<Graph>& factors) {
  Graph out(1);
  for (const auto& f : factors) out = cartesian_product(out, f);
  return out;
}

bool verify_factorization(const Graph& g, const Factorization& f) {
  if (f.coordinates.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  const Graph rebuilt = product_of(f.factors);
  std::vector<VertexId> mapping;
  for (const auto& c : f.coordinates) {
    if (c.size() != f.factors.size()) return false;
    VertexId index = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= f.factors[i].vertex_count()) return false;
      index = index * f.factors[i].vertex_count() + c[i];
    }
    mapping.push_back(index);
  }
  return is_isomorphism(g, rebuilt, mapping);
}

Factorization prime_factorize(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw Error(ErrorKind::TooLarge, "factorization beyond " + std::to_string(max_vertices) + " vertices");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  if (g.vertex_count() == 1) return Factorization{{}, {{}}};

  UnionFind uf(g.edge_count());
  local_relation(g, uf);
  auto found = decompose_classes(g, uf);
  if (!found) {
    djokovic_winkler(g, uf);
    found = decompose_classes(g, uf);
  }
  if (!found) throw Error(ErrorKind::ValidationFailed, "product relation did not yield a decomposition");
  Factorization result = canonical_order(std::move(*found));
  if (!verify_factorization(g, result))
    throw Error(ErrorKind::ValidationFailed, "rebuilt product is not isomorphic to the input");
  return result;
}

bool is_prime(const Graph& g) { return prime_factorize(g).factors.size() <= 1; }

StagGraph product_of_block_stags(const Graph& g, std::size_t max_trees) {
  std::vector<Graph> parts;
  for (const auto& b : block_decomposition(g).blocks) parts.push_back(build_stag(b.graph, max_trees).graph);
  const Graph p = product_of(parts);
  Graph renamed(p.vertex_count());
  for (const auto& e : p.edges()) renamed.add_edge(e.u, e.v);
  return unannotated_stag(std::move(renamed));
}

}  // namespace stag
