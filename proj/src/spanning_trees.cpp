#include "stag/spanning_trees.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "stag/connectivity.hpp"
#include "stag/error.hpp"

namespace stag {
namespace {

// Rooted view of a spanning tree: parent links, depths and preorder intervals,
// so path walks and "which side of tree edge f" queries are cheap.
class TreeView {
 public:
  TreeView(const Graph& g, const SpanningTree& t)
      : n_(static_cast<std::size_t>(g.vertex_count())),
        in_tree_(static_cast<std::size_t>(g.edge_count()), false),
        parent_(n_, -1),
        parent_edge_(n_, -1),
        depth_(n_, 0),
        pre_(n_, 0),
        size_(n_, 1),
        child_of_edge_(static_cast<std::size_t>(g.edge_count()), -1) {
    std::vector<std::vector<Incidence>> adj(n_);
    for (EdgeId e : t.edges()) {
      in_tree_[static_cast<std::size_t>(e)] = true;
      const auto& ed = g.edge(e);
      adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
      adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
    std::vector<VertexId> order;
    order.reserve(n_);
    std::vector<VertexId> stack{0};
    std::vector<bool> seen(n_, false);
    seen[0] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      pre_[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
      order.push_back(v);
      for (const auto& inc : adj[static_cast<std::size_t>(v)]) {
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (seen[w]) continue;
        seen[w] = true;
        parent_[w] = v;
        parent_edge_[w] = inc.edge;
        depth_[w] = depth_[static_cast<std::size_t>(v)] + 1;
        child_of_edge_[static_cast<std::size_t>(inc.edge)] = inc.neighbor;
        stack.push_back(inc.neighbor);
      }
    }
    // preorder from an explicit stack is still a valid DFS preorder, so
    // subtree sizes accumulate in reverse order
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto v = static_cast<std::size_t>(*it);
      if (parent_[v] >= 0) size_[static_cast<std::size_t>(parent_[v])] += size_[v];
    }
  }

  bool in_tree(EdgeId e) const { return in_tree_[static_cast<std::size_t>(e)]; }

  // Whether x lies in the subtree hanging below tree edge f.
  bool below(EdgeId f, VertexId x) const {
    const auto c = static_cast<std::size_t>(child_of_edge_[static_cast<std::size_t>(f)]);
    const int p = pre_[static_cast<std::size_t>(x)];
    return pre_[c] <= p && p < pre_[c] + size_[c];
  }

  // Tree path edges from a to b, in walking order.
  std::vector<EdgeId> path(VertexId a, VertexId b) const {
    std::vector<EdgeId> from_a, from_b;
    while (a != b) {
      if (depth_[static_cast<std::size_t>(a)] >= depth_[static_cast<std::size_t>(b)]) {
        from_a.push_back(parent_edge_[static_cast<std::size_t>(a)]);
        a = parent_[static_cast<std::size_t>(a)];
      } else {
        from_b.push_back(parent_edge_[static_cast<std::size_t>(b)]);
        b = parent_[static_cast<std::size_t>(b)];
      }
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
  }

 private:
  std::size_t n_;
  std::vector<bool> in_tree_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> pre_;
  std::vector<int> size_;
  std::vector<VertexId> child_of_edge_;
};

std::vector<SpanningTree> sorted_unique(std::vector<SpanningTree> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_tree_edge(const SpanningTree& t, EdgeId e) {
  if (!t.contains(e))
    throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " is not in the tree");
}

// Augmenting-path max flow on a tiny unit-capacity network.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void arc(int from, int to) {
    adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  bool augment(int source, int sink) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!q.empty() && !seen[static_cast<std::size_t>(sink)]) {
      const int v = q.front();
      q.pop();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap == 0 || seen[static_cast<std::size_t>(arc.to)]) continue;
        seen[static_cast<std::size_t>(arc.to)] = true;
        via[static_cast<std::size_t>(arc.to)] = a;
        q.push(arc.to);
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return false;
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(a)].cap -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

bool connected_without(const Graph& g, const std::vector<bool>& alive, EdgeId skip, VertexId from,
                       VertexId to) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<VertexId> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const auto& inc : g.incident(v)) {
      if (inc.edge == skip || !alive[static_cast<std::size_t>(inc.edge)]) continue;
      if (seen[static_cast<std::size_t>(inc.neighbor)]) continue;
      seen[static_cast<std::size_t>(inc.neighbor)] = true;
      stack.push_back(inc.neighbor);
    }
  }
  return false;
}

}  // namespace

SpanningTree::SpanningTree(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

bool SpanningTree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

SpanningTree SpanningTree::exchange(EdgeId removed, EdgeId added) const {
  std::vector<EdgeId> next;
  next.reserve(edges_.size());
  bool placed = false;
  for (EdgeId e : edges_) {
    if (e == removed) continue;
    if (!placed && added < e) {
      next.push_back(added);
      placed = true;
    }
    next.push_back(e);
  }
  if (!placed) next.push_back(added);
  SpanningTree t;
  t.edges_ = std::move(next);
  return t;
}

std::size_t SpanningTreeHash::operator()(const SpanningTree& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (EdgeId e : t.edges()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_tree(const SpanningTree& t) {
  std::string out = "t: ";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.edges()[i]);
  }
  return out;
}

bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
  if (static_cast<int>(t.size()) != g.vertex_count() - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (EdgeId e : t.edges()) {
    if (e < 0 || e >= g.edge_count()) return false;
    const int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

BigInt count_spanning_trees(const Graph& g) {
  const int k = g.vertex_count() - 1;
  if (k <= 0) return g.vertex_count() == 1 ? BigInt(1) : BigInt(0);
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(k),
                                     std::vector<BigInt>(static_cast<std::size_t>(k), 0));
  // reduced Laplacian: drop vertex 0
  for (const auto& e : g.edges()) {
    const int a = e.u - 1, b = e.v - 1;
    if (a >= 0) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] += 1;
    if (b >= 0) m[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] += 1;
    if (a >= 0 && b >= 0) {
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= 1;
      m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    if (m[i][i] == 0) {
      std::size_t r = i + 1;
      while (r < static_cast<std::size_t>(k) && m[r][i] == 0) ++r;
      if (r == static_cast<std::size_t>(k)) return 0;
      std::swap(m[i], m[r]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < static_cast<std::size_t>(k); ++r) {
      for (std::size_t c = i + 1; c < static_cast<std::size_t>(k); ++c)
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  BigInt det = m.back().back();
  return sign < 0 ? BigInt(-det) : det;
}

SpanningTree dfs_spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  std::vector<EdgeId> edges;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  seen[0] = true;
  while (!stack.empty()) {
    auto& f = stack.back();
    const auto inc = g.incident(f.v);
    if (f.next == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence step = inc[f.next++];
    if (seen[static_cast<std::size_t>(step.neighbor)]) continue;
    seen[static_cast<std::size_t>(step.neighbor)] = true;
    edges.push_back(step.edge);
    stack.push_back({step.neighbor, 0});
  }
  return SpanningTree(std::move(edges));
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::size_t max_trees) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const BigInt count = count_spanning_trees(g);
  if (count > max_trees)
    throw Error(ErrorKind::TooManyTrees,
                "graph has " + count.str() + " spanning trees, limit is " + std::to_string(max_trees));

  std::unordered_set<SpanningTree, SpanningTreeHash> seen;
  std::vector<SpanningTree> found;
  found.reserve(static_cast<std::size_t>(count));
  std::deque<SpanningTree> queue;
  SpanningTree start = dfs_spanning_tree(g);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    SpanningTree t = std::move(queue.front());
    queue.pop_front();
    for (auto& next : type2_neighbors(g, t))
      if (seen.insert(next).second) queue.push_back(std::move(next));
    found.push_back(std::move(t));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<EdgeId> fundamental_cycle(const Graph& g, const SpanningTree& t, EdgeId e) {
  if (t.contains(e))
    throw Error(ErrorKind::EdgeInTree, "edge " + std::to_string(e) + " is a tree edge");
  const TreeView view(g, t);
  std::vector<EdgeId> cycle{e};
  const auto path = view.path(g.edge(e).v, g.edge(e).u);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

std::vector<EdgeId> fundamental_cut(const Graph& g, const SpanningTree& t, EdgeId f) {
  check_tree_edge(t, f);
  const TreeView view(g, t);
  std::vector<EdgeId> cut;
  for (const auto& e : g.edges())
    if (view.below(f, e.u) != view.below(f, e.v)) cut.push_back(e.id);
  return cut;
}

std::vector<SpanningTree> type1_neighbors(const Graph& g, const SpanningTree& t) {
  const TreeView view(g, t);
  std::vector<SpanningTree> out;
  for (const auto& e : g.edges()) {
    if (view.in_tree(e.id)) continue;
    for (EdgeId f : view.path(e.u, e.v)) out.push_back(t.exchange(f, e.id));
  }
  return sorted_unique(std::move(out));
}

std::vector<SpanningTree> type2_neighbors(const Graph& g, const SpanningTree& t) {
  const TreeView view(g, t);
  std::vector<SpanningTree> out;
  for (EdgeId f : t.edges()) {
    for (const auto& e : g.edges()) {
      if (view.in_tree(e.id)) continue;
      if (view.below(f, e.u) != view.below(f, e.v)) out.push_back(t.exchange(f, e.id));
    }
  }
  return sorted_unique(std::move(out));
}

EdgeId witness_edge_for_pair(const Graph& g, const SpanningTree& t, EdgeId e1, EdgeId e2) {
  if (!is_two_connected(g) || g.edge_count() < 3)
    throw Error(ErrorKind::NotTwoConnected, "witness search needs a 2-connected graph other than K2");
  check_tree_edge(t, e1);
  check_tree_edge(t, e2);
  if (e1 == e2) throw Error(ErrorKind::InvalidArgument, "e1 and e2 must differ");
  const TreeView view(g, t);
  for (const auto& e : g.edges()) {
    if (view.in_tree(e.id)) continue;
    const auto p = view.path(e.u, e.v);
    if (std::find(p.begin(), p.end(), e1) != p.end() && std::find(p.begin(), p.end(), e2) != p.end())
      return e.id;
  }
  throw Error(ErrorKind::NoWitness, "no fundamental cycle of the tree contains edges " +
                                        std::to_string(e1) + " and " + std::to_string(e2));
}

bool cycle_through_both(const Graph& g, EdgeId e1, EdgeId e2, const std::vector<bool>& alive_in) {
  if (e1 == e2) return false;
  std::vector<bool> alive = alive_in.empty() ? std::vector<bool>(static_cast<std::size_t>(g.edge_count()), true)
                                             : alive_in;
  if (!alive[static_cast<std::size_t>(e1)] || !alive[static_cast<std::size_t>(e2)]) return false;
  alive[static_cast<std::size_t>(e1)] = false;
  alive[static_cast<std::size_t>(e2)] = false;

  const Edge a = g.edge(e1), b = g.edge(e2);
  // shared endpoint: the two far ends must connect while avoiding it
  for (VertexId s : {a.u, a.v}) {
    if (s != b.u && s != b.v) continue;
    const VertexId x = a.other(s), y = b.other(s);
    std::vector<bool> live = alive;
    for (const auto& inc : g.incident(s)) live[static_cast<std::size_t>(inc.edge)] = false;
    return connected_without(g, live, -1, x, y);
  }

  const int n = g.vertex_count();
  const int source = 2 * n, sink = 2 * n + 1;
  UnitFlow flow(2 * n + 2);
  for (int v = 0; v < n; ++v) flow.arc(2 * v, 2 * v + 1);  // vertex capacity
  for (const auto& e : g.edges()) {
    if (!alive[static_cast<std::size_t>(e.id)]) continue;
    flow.arc(2 * e.u + 1, 2 * e.v);
    flow.arc(2 * e.v + 1, 2 * e.u);
  }
  flow.arc(source, 2 * a.u);
  flow.arc(source, 2 * a.v);
  flow.arc(2 * b.u + 1, sink);
  flow.arc(2 * b.v + 1, sink);
  return flow.augment(source, sink) && flow.augment(source, sink);
}

ReverseDeleteResult reverse_delete_tree(const Graph& g,
                                        std::optional<std::pair<EdgeId, EdgeId>> protected_pair) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<bool> alive(m, true);
  ReverseDeleteResult result;
  auto on_cycle = [&](EdgeId e) {
    return connected_without(g, alive, e, g.edge(e).u, g.edge(e).v);
  };

  if (!protected_pair) {
    for (const auto& e : g.edges()) {
      if (!on_cycle(e.id)) continue;
      alive[static_cast<std::size_t>(e.id)] = false;
      result.trace.push_back(e.id);
    }
  } else {
    const auto [e1, e2] = *protected_pair;
    if (e1 < 0 || e2 < 0 || e1 >= g.edge_count() || e2 >= g.edge_count() || e1 == e2)
      throw Error(ErrorKind::InvalidArgument, "protected pair must be two distinct edges");
    if (!is_two_connected(g) || g.edge_count() < 3)
      throw Error(ErrorKind::NotTwoConnected, "protected reverse delete needs a 2-connected graph");
    int live = g.edge_count();
    while (live > g.vertex_count() - 1) {
      std::optional<EdgeId> chosen, fallback;
      for (const auto& e : g.edges()) {
        if (!alive[static_cast<std::size_t>(e.id)] || e.id == e1 || e.id == e2 || !on_cycle(e.id)) continue;
        if (!fallback) fallback = e.id;
        alive[static_cast<std::size_t>(e.id)] = false;
        const bool keeps = cycle_through_both(g, e1, e2, alive);
        alive[static_cast<std::size_t>(e.id)] = true;
        if (keeps) {
          chosen = e.id;
          break;
        }
      }
      const EdgeId victim = chosen ? *chosen : *fallback;
      alive[static_cast<std::size_t>(victim)] = false;
      result.trace.push_back(victim);
      --live;
    }
  }

  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (alive[static_cast<std::size_t>(e)]) kept.push_back(e);
  result.tree = SpanningTree(std::move(kept));
  return result;
}

}  // namespace stag
