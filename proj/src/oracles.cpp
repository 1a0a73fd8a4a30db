#include "stag/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "stag/error.hpp"
#include "stag/isomorphism.hpp"
#include "stag/kernels/symdiff.hpp"

namespace stag {
namespace {

int root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

bool spans_without_cycle(const Graph& g, std::uint32_t mask) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!(mask >> e & 1u)) continue;
    const int a = root(parent, g.edge(e).u), b = root(parent, g.edge(e).v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

// Small labeled graphs on k <= 7 vertices as adjacency bitmasks.
struct Small {
  int k;
  std::vector<std::uint32_t> adj;

  bool connected_without(int skip_u = -1, int skip_v = -1) const {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < k; ++v) {
        if (!(frontier >> v & 1u)) continue;
        std::uint32_t row = adj[static_cast<std::size_t>(v)];
        if (v == skip_u) row &= ~(1u << skip_v);
        if (v == skip_v) row &= ~(1u << skip_u);
        next |= row;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << k) - 1;
  }

  long long tree_count() const {
    // Bareiss on the Laplacian minus its last row and column
    const int d = k - 1;
    std::vector<long long> a(static_cast<std::size_t>(d * d), 0);
    auto at = [&](int i, int j) -> long long& { return a[static_cast<std::size_t>(i * d + j)]; };
    for (int i = 0; i < d; ++i) {
      at(i, i) = std::popcount(adj[static_cast<std::size_t>(i)]);
      for (int j = 0; j < d; ++j)
        if (i != j && (adj[static_cast<std::size_t>(i)] >> j & 1u)) at(i, j) = -1;
    }
    long long prev = 1;
    int sign = 1;
    for (int p = 0; p < d; ++p) {
      if (at(p, p) == 0) {
        int r = p + 1;
        while (r < d && at(r, p) == 0) ++r;
        if (r == d) return 0;
        for (int j = 0; j < d; ++j) std::swap(at(p, j), at(r, j));
        sign = -sign;
      }
      for (int i = p + 1; i < d; ++i)
        for (int j = p + 1; j < d; ++j) at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      prev = at(p, p);
    }
    return d == 0 ? 1 : sign * at(d - 1, d - 1);
  }

  bool bridgeless() const {
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v)
        if ((adj[static_cast<std::size_t>(u)] >> v & 1u) && !connected_without(u, v)) return false;
    return true;
  }
};

}  // namespace

std::vector<SpanningTree> brute_force_trees(const Graph& g) {
  if (g.edge_count() > kOracleMaxEdges)
    throw Error(ErrorKind::TooLarge, "subset oracle limited to " + std::to_string(kOracleMaxEdges) + " edges");
  const int need = g.vertex_count() - 1;
  const int m = g.edge_count();
  std::vector<SpanningTree> out;
  if (need < 0 || need > m) return out;
  if (need == 0) return {SpanningTree{}};
  // Gosper's hack over need-element subsets
  std::uint32_t mask = (1u << need) - 1;
  const std::uint32_t limit = 1u << m;
  while (mask < limit) {
    if (spans_without_cycle(g, mask)) {
      std::vector<EdgeId> edges;
      for (EdgeId e = 0; e < m; ++e)
        if (mask >> e & 1u) edges.push_back(e);
      out.emplace_back(std::move(edges));
    }
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

StagGraph brute_force_stag(const Graph& g, std::size_t max_trees) {
  StagGraph s;
  s.trees = brute_force_trees(g);
  if (s.trees.size() > max_trees)
    throw Error(ErrorKind::TooLarge, "oracle STAG limited to " + std::to_string(max_trees) + " trees");
  s.graph = Graph(static_cast<int>(s.trees.size()));
  const auto packed = kernels::pack_trees(s.trees, g.edge_count());
  std::vector<std::uint32_t> diff(packed.count);
  for (std::size_t i = 0; i < packed.count; ++i) {
    const std::size_t rest = packed.count - i - 1;
    kernels::symdiff_row(packed.row(i), packed.row(i + 1 < packed.count ? i + 1 : i), rest, packed.words,
                         diff.data());
    for (std::size_t j = 0; j < rest; ++j)
      if (diff[j] == 2) s.graph.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1 + j));
  }
  s.origin = g;
  return s;
}

std::optional<Graph> brute_force_is_stag(const Graph& h, int n_max) {
  if (n_max > kOracleMaxPreimageVertices)
    throw Error(ErrorKind::TooLarge, "preimage oracle limited to " + std::to_string(kOracleMaxPreimageVertices) +
                                         " vertices");
  const long long target = h.vertex_count();
  if (target == 0) return std::nullopt;
  if (target == 1 && n_max >= 1) {
    if (h.edge_count() == 0) return Graph(1);
    return std::nullopt;
  }
  for (int k = 3; k <= n_max; ++k) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
    const std::uint32_t total = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (std::popcount(mask) < k) continue;
      Small s{k, std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0)};
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        s.adj[static_cast<std::size_t>(pairs[i].first)] |= 1u << pairs[i].second;
        s.adj[static_cast<std::size_t>(pairs[i].second)] |= 1u << pairs[i].first;
      }
      if (!s.connected_without() || s.tree_count() != target || !s.bridgeless()) continue;
      Graph g(k);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
      if (are_isomorphic(brute_force_stag(g, static_cast<std::size_t>(target)).graph, h)) return g;
    }
  }
  return std::nullopt;
}

}  // namespace stag
