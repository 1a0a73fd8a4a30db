#include "stag/stag.hpp"

#include <algorithm>
#include <unordered_map>

#include "json.hpp"
#include "stag/error.hpp"
#include "stag/io.hpp"

namespace stag {
namespace {

void require_annotated(const StagGraph& s) {
  if (!s.annotated()) throw Error(ErrorKind::Unannotated, "STAG has no spanning-tree annotation");
}

using Set = std::vector<VertexId>;

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& h) : nb_(h.sorted_neighbors()) {}

  void run(Set r, Set p, Set x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(std::move(r));
      return;
    }
    VertexId pivot = -1;
    std::size_t best = 0;
    for (const Set* pool : {&p, &x}) {
      for (VertexId u : *pool) {
        const std::size_t k = intersect(p, nb(u)).size();
        if (pivot == -1 || k > best) {
          pivot = u;
          best = k;
        }
      }
    }
    Set candidates;
    std::set_difference(p.begin(), p.end(), nb(pivot).begin(), nb(pivot).end(),
                        std::back_inserter(candidates));
    for (VertexId v : candidates) {
      Set r2 = r;
      r2.insert(std::upper_bound(r2.begin(), r2.end(), v), v);
      run(std::move(r2), intersect(p, nb(v)), intersect(x, nb(v)));
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }

  const Set& nb(VertexId v) const { return nb_[static_cast<std::size_t>(v)]; }

  std::vector<Set> out;

 private:
  std::vector<Set> nb_;
};

std::vector<VertexId> degeneracy_order(const Graph& h) {
  const auto n = static_cast<std::size_t>(h.vertex_count());
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = h.degree(static_cast<VertexId>(v));
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[static_cast<std::size_t>(best)])) best = static_cast<VertexId>(v);
    removed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (const auto& inc : h.incident(best))
      if (!removed[static_cast<std::size_t>(inc.neighbor)]) --deg[static_cast<std::size_t>(inc.neighbor)];
  }
  return order;
}

}  // namespace

StagGraph build_stag(const Graph& g, std::size_t max_trees) {
  StagGraph s;
  s.trees = enumerate_spanning_trees(g, max_trees);
  s.graph = Graph(static_cast<int>(s.trees.size()));
  std::unordered_map<SpanningTree, VertexId, SpanningTreeHash> index;
  for (std::size_t i = 0; i < s.trees.size(); ++i) index.emplace(s.trees[i], static_cast<VertexId>(i));
  for (std::size_t i = 0; i < s.trees.size(); ++i) {
    std::vector<VertexId> later;
    for (const auto& t : type2_neighbors(g, s.trees[i])) {
      const VertexId j = index.at(t);
      if (j > static_cast<VertexId>(i)) later.push_back(j);
    }
    std::sort(later.begin(), later.end());
    for (VertexId j : later) s.graph.add_edge(static_cast<VertexId>(i), j);
  }
  s.origin = g;
  return s;
}

StagGraph unannotated_stag(Graph h) {
  StagGraph s;
  s.graph = std::move(h);
  return s;
}

std::optional<VertexId> find_tree(const StagGraph& s, const SpanningTree& t) {
  const auto it = std::lower_bound(s.trees.begin(), s.trees.end(), t);
  if (it == s.trees.end() || *it != t) return std::nullopt;
  return static_cast<VertexId>(it - s.trees.begin());
}

NeighborhoodPartitions neighborhood_partitions(const StagGraph& s, VertexId v) {
  require_annotated(s);
  const Graph& g = *s.origin;
  const SpanningTree& t = s.trees.at(static_cast<std::size_t>(v));
  auto member = [&](const SpanningTree& next) {
    const auto id = find_tree(s, next);
    if (!id) throw Error(ErrorKind::ValidationFailed, "exchange produced a tree missing from the STAG");
    return *id;
  };

  NeighborhoodPartitions out;
  for (EdgeId f : t.edges()) {
    NeighborClass c{f, {}};
    for (EdgeId e : fundamental_cut(g, t, f))
      if (e != f) c.members.push_back(member(t.exchange(f, e)));
    std::sort(c.members.begin(), c.members.end());
    out.cut_classes.push_back(std::move(c));
  }
  for (const auto& e : g.edges()) {
    if (t.contains(e.id)) continue;
    NeighborClass c{e.id, {}};
    const auto cycle = fundamental_cycle(g, t, e.id);
    for (std::size_t i = 1; i < cycle.size(); ++i) c.members.push_back(member(t.exchange(cycle[i], e.id)));
    std::sort(c.members.begin(), c.members.end());
    out.cycle_classes.push_back(std::move(c));
  }
  return out;
}

std::vector<CliqueClass> ground_truth_cliques(const StagGraph& s) {
  require_annotated(s);
  // each cycle or cut clique is a neighbor class of one of its members
  std::vector<CliqueClass> out;
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    const auto parts = neighborhood_partitions(s, v);
    auto emit = [&](const NeighborClass& c, CliqueTag tag) {
      CliqueClass k{c.members, tag};
      k.members.insert(std::upper_bound(k.members.begin(), k.members.end(), v), v);
      out.push_back(std::move(k));
    };
    for (const auto& c : parts.cycle_classes) emit(c, CliqueTag::Cycle);
    for (const auto& c : parts.cut_classes)
      if (!c.members.empty()) emit(c, CliqueTag::Cut);
  }
  std::sort(out.begin(), out.end(), [](const CliqueClass& a, const CliqueClass& b) {
    return a.members != b.members ? a.members < b.members : a.tag < b.tag;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexId>> maximal_cliques(const Graph& h) {
  CliqueSearch search(h);
  const auto order = degeneracy_order(h);
  std::vector<int> position(static_cast<std::size_t>(h.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (VertexId v : order) {
    Set p, x;
    for (VertexId w : search.nb(v))
      (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)] ? p : x).push_back(w);
    search.run({v}, std::move(p), std::move(x));
  }
  auto out = std::move(search.out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string stag_to_json(const StagGraph& s) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    if (s.annotated())
      vertices.push_back(s.trees[static_cast<std::size_t>(v)].edges());
    else
      vertices.push_back(nullptr);
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : s.graph.edges()) edges.push_back({e.u, e.v});
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string stag_to_dot(const StagGraph& s) {
  std::vector<std::string> tips;
  if (s.annotated())
    for (const auto& t : s.trees) tips.push_back(format_tree(t));
  return to_dot(s.graph, tips);
}

}  // namespace stag
