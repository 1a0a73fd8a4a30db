#include "stag/generators.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "stag/error.hpp"
#include "stag/spanning_trees.hpp"

namespace stag {
namespace {

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
}

// Same graph with shuffled vertex ids and edge order.
Graph relabeled(const Graph& g, Rng& rng) {
  std::vector<VertexId> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  shuffle(edges, rng);
  Graph out(g.vertex_count());
  for (const auto& [u, v] : edges) out.add_edge(u, v);
  return out;
}

void add_random_chords(Graph& g, int count, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> missing;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
  shuffle(missing, rng);
  for (int i = 0; i < count; ++i) g.add_edge(missing[static_cast<std::size_t>(i)].first, missing[static_cast<std::size_t>(i)].second);
}

Graph two_connected_unshuffled(int n, int m, Rng& rng) {
  const int ears = m - n;
  const int cycle = ears == 0 ? n : rng.between(3, n);
  Graph g = cycle_graph(cycle);
  // split the remaining vertices among ears with internal vertices
  std::vector<int> inner(static_cast<std::size_t>(ears), 0);
  for (int v = cycle; v < n; ++v) ++inner[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(ears)))];
  int chords = 0;
  for (int len : inner) {
    if (len == 0) {
      ++chords;
      continue;
    }
    const auto count = static_cast<std::uint64_t>(g.vertex_count());
    const auto a = static_cast<VertexId>(rng.below(count));
    auto b = static_cast<VertexId>(rng.below(count - 1));
    if (b >= a) ++b;
    VertexId last = a;
    for (int i = 0; i < len; ++i) {
      const VertexId w = g.add_vertex(std::to_string(g.vertex_count()));
      g.add_edge(last, w);
      last = w;
    }
    g.add_edge(last, b);
  }
  add_random_chords(g, chords, rng);
  return g;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = engine_.max() - engine_.max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) throw Error(ErrorKind::InvalidArgument, "no connected graph with this n and m");
  Rng rng(seed);
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(v))), v);
  add_random_chords(g, m - (n - 1), rng);
  return relabeled(g, rng);
}

Graph random_two_connected_graph(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 3 || m < n || m > max_m) throw Error(ErrorKind::InvalidArgument, "no 2-connected graph with this n and m");
  Rng rng(seed);
  return relabeled(two_connected_unshuffled(n, m, rng), rng);
}

Graph random_multi_block_graph(int max_n, std::uint64_t seed, std::size_t max_trees) {
  if (max_n < 4) throw Error(ErrorKind::InvalidArgument, "multi-block graphs need at least four vertices");
  Rng rng(seed);
  for (;;) {
    Graph g(1);
    BigInt trees = 1;
    int blocks = 0;
    int failures = 0;
    while (failures < 8) {
      const int room = max_n - g.vertex_count();
      if (room < 1 || (blocks >= 2 && rng.below(3) == 0)) break;
      // a bridge, or a 2-connected piece on k vertices sharing one with g
      const int k = room >= 2 && rng.below(4) != 0 ? rng.between(3, std::min(room + 1, 5)) : 2;
      Graph piece = k == 2 ? path_graph(2) : two_connected_unshuffled(k, rng.between(k, k * (k - 1) / 2), rng);
      const BigInt next = trees * count_spanning_trees(piece);
      if (next > max_trees) {
        ++failures;
        continue;
      }
      trees = next;
      const auto attach = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
      std::vector<VertexId> image{attach};
      for (VertexId v = 1; v < piece.vertex_count(); ++v) image.push_back(g.add_vertex(std::to_string(g.vertex_count())));
      for (const auto& e : piece.edges()) g.add_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]);
      ++blocks;
    }
    if (blocks >= 2) return relabeled(g, rng);
  }
}

}  // namespace stag
