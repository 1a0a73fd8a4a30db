#include "stag/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "stag/error.hpp"

namespace stag {
namespace {

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<VertexId> q;
    q.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        auto& l = label[static_cast<std::size_t>(inc.neighbor)];
        if (l == -1) {
          l = next;
          q.push(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

Block make_block(const Graph& host, std::vector<EdgeId> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  std::vector<VertexId> verts;
  for (EdgeId e : edge_ids) {
    verts.push_back(host.edge(e).u);
    verts.push_back(host.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Block b;
  for (VertexId v : verts) b.graph.add_vertex(host.name(v));
  auto local = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (EdgeId e : edge_ids) b.graph.add_edge(local(host.edge(e).u), local(host.edge(e).v));
  b.host_vertices = std::move(verts);
  b.host_edges = std::move(edge_ids);
  return b;
}

}  // namespace

bool is_connected(const Graph& g) { return component_count(g) == 1; }

int component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g);
  BlockDecomposition out;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (g.edge_count() == 0) {
    Block b;
    b.graph.add_vertex(g.name(0));
    b.host_vertices = {0};
    out.blocks.push_back(std::move(b));
    return out;
  }

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> raw_blocks;
  std::vector<Frame> frames;
  int clock = 0;
  disc[0] = low[0] = clock++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      const Incidence step = inc[f.next++];
      if (step.edge == f.parent_edge) continue;
      const auto w = static_cast<std::size_t>(step.neighbor);
      const auto v = static_cast<std::size_t>(f.v);
      if (disc[w] == -1) {
        edge_stack.push_back(step.edge);
        disc[w] = low[w] = clock++;
        frames.push_back({step.neighbor, step.edge, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(step.edge);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const auto child = static_cast<std::size_t>(done.v);
    const auto parent = static_cast<std::size_t>(frames.back().v);
    low[parent] = std::min(low[parent], low[child]);
    if (low[child] >= disc[parent]) {
      std::vector<EdgeId> block;
      while (true) {
        const EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == done.parent_edge) break;
      }
      raw_blocks.push_back(std::move(block));
    }
  }

  for (auto& rb : raw_blocks) out.blocks.push_back(make_block(g, std::move(rb)));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.host_edges.front() < b.host_edges.front(); });

  std::vector<int> membership(n, 0);
  for (const auto& b : out.blocks)
    for (VertexId v : b.host_vertices) ++membership[static_cast<std::size_t>(v)];
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (membership[static_cast<std::size_t>(v)] > 1) out.cut_vertices.push_back(v);
  for (int bi = 0; bi < static_cast<int>(out.blocks.size()); ++bi)
    for (VertexId v : out.blocks[static_cast<std::size_t>(bi)].host_vertices)
      if (membership[static_cast<std::size_t>(v)] > 1) out.block_cut_tree.emplace_back(bi, v);
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  if (g.vertex_count() == 2) return g.edge_count() == 1;
  if (g.vertex_count() < 3) return false;
  return block_decomposition(g).blocks.size() == 1;
}

std::vector<EdgeId> bridges(const Graph& g) {
  std::vector<EdgeId> out;
  for (const auto& b : block_decomposition(g).blocks)
    if (b.host_edges.size() == 1) out.push_back(b.host_edges.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<EdgeId>> common_cycle_classes(const Graph& g) {
  require_connected(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<bool> in_tree(static_cast<std::size_t>(g.edge_count()), false);
  std::queue<VertexId> q;
  q.push(0);
  depth[0] = 0;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      const auto w = static_cast<std::size_t>(inc.neighbor);
      if (depth[w] != -1) continue;
      depth[w] = depth[static_cast<std::size_t>(v)] + 1;
      parent[w] = v;
      parent_edge[w] = inc.edge;
      in_tree[static_cast<std::size_t>(inc.edge)] = true;
      q.push(inc.neighbor);
    }
  }

  UnionFind uf(g.edge_count());
  std::vector<bool> covered(static_cast<std::size_t>(g.edge_count()), false);
  for (const auto& e : g.edges()) {
    if (in_tree[static_cast<std::size_t>(e.id)]) continue;
    covered[static_cast<std::size_t>(e.id)] = true;
    VertexId a = e.u, b = e.v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      const EdgeId up = parent_edge[static_cast<std::size_t>(a)];
      covered[static_cast<std::size_t>(up)] = true;
      uf.unite(e.id, up);
      a = parent[static_cast<std::size_t>(a)];
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!covered[static_cast<std::size_t>(e)])
      throw Error(ErrorKind::HasBridge, "edge " + std::to_string(e) + " is a bridge");

  std::vector<std::vector<EdgeId>> classes;
  std::vector<int> slot(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int root = uf.find(e);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s == -1) {
      s = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(s)].push_back(e);
  }
  return classes;
}

std::vector<EdgeCut> minimal_edge_cuts(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 30)
    throw Error(ErrorKind::TooLarge, "minimal_edge_cuts: n=" + std::to_string(n) +
                                         " exceeds bound " + std::to_string(max_n));
  require_connected(g);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  auto connected = [&](std::uint32_t set) {
    if (set == 0) return false;
    std::uint32_t seen = set & (~set + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  std::vector<EdgeCut> cuts;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1u;
    const std::uint32_t other = all & ~side;
    if (other == 0 || !connected(side) || !connected(other)) continue;
    EdgeCut cut;
    for (const auto& e : g.edges())
      if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) cut.edge_ids.push_back(e.id);
    for (VertexId v = 0; v < n; ++v) ((side >> v) & 1u ? cut.side_a : cut.side_b).push_back(v);
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const EdgeCut& a, const EdgeCut& b) { return a.edge_ids < b.edge_ids; });
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](const EdgeCut& a, const EdgeCut& b) { return a.edge_ids == b.edge_ids; }),
             cuts.end());
  return cuts;
}

int circumference(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (g.edge_count() <= n - component_count(g))
    throw Error(ErrorKind::Acyclic, "graph is a forest");
  if (n > max_n || n > 24)
    throw Error(ErrorKind::TooLarge, "circumference: n=" + std::to_string(n) +
                                         " exceeds bound " + std::to_string(max_n));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  int best = 0;
  // ends[mask] = endpoints of simple paths that start at s and visit exactly mask,
  // where s is the lowest vertex of mask.
  std::vector<std::uint32_t> ends(std::size_t{1} << n);
  for (int s = 0; s < n; ++s) {
    std::fill(ends.begin(), ends.end(), 0u);
    const std::uint32_t allowed = ~((1u << s) - 1) & ((n == 32 ? 0u : (1u << n)) - 1);
    ends[std::size_t{1} << s] = 1u << s;
    for (std::uint32_t mask = 1u << s; mask < (1u << n); ++mask) {
      const std::uint32_t here = ends[mask];
      if (here == 0) continue;
      const int len = std::popcount(mask);
      if (len >= 3 && (here & adj[static_cast<std::size_t>(s)])) best = std::max(best, len);
      for (std::uint32_t h = here; h; h &= h - 1) {
        const int v = std::countr_zero(h);
        for (std::uint32_t nb = adj[static_cast<std::size_t>(v)] & allowed & ~mask; nb; nb &= nb - 1) {
          const int w = std::countr_zero(nb);
          ends[mask | (1u << w)] |= 1u << w;
        }
      }
    }
  }
  return best;
}

}  // namespace stag
