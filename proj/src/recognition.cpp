#include "stag/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/factorization.hpp"
#include "stag/isomorphism.hpp"
#include "stag/spanning_trees.hpp"
#include "stag/stag.hpp"

namespace stag {
namespace {

using Rows = std::vector<std::vector<VertexId>>;

bool linked(const Rows& rows, VertexId u, VertexId v) {
  const auto& r = rows[static_cast<std::size_t>(u)];
  return std::binary_search(r.begin(), r.end(), v);
}

std::vector<VertexId> extend_clique(const Rows& rows, std::vector<VertexId> seed) {
  std::sort(seed.begin(), seed.end());
  std::vector<VertexId> common = rows[static_cast<std::size_t>(seed.front())];
  for (std::size_t i = 1; i < seed.size(); ++i) {
    const auto& r = rows[static_cast<std::size_t>(seed[i])];
    std::vector<VertexId> next;
    std::set_intersection(common.begin(), common.end(), r.begin(), r.end(), std::back_inserter(next));
    common = std::move(next);
  }
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (!linked(rows, common[i], common[j]))
        throw Error(ErrorKind::NotAStag, "clique seed extends to more than one maximal clique");
  seed.insert(seed.end(), common.begin(), common.end());
  std::sort(seed.begin(), seed.end());
  return seed;
}

constexpr int kMaxFreeComponents = 12;

std::vector<NeighborhoodOption> options_at(const Rows& rows, VertexId x) {
  const auto& nb = rows[static_cast<std::size_t>(x)];
  if (nb.empty()) return {NeighborhoodOption{}};

  // cliques through x, restricted to N(x), grown from triangles
  std::set<std::vector<VertexId>> found;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (!linked(rows, nb[i], nb[j])) continue;
      auto k = extend_clique(rows, {x, nb[i], nb[j]});
      k.erase(std::find(k.begin(), k.end(), x));
      found.insert(std::move(k));
    }
  }
  const std::vector<std::vector<VertexId>> cliques(found.begin(), found.end());
  std::map<VertexId, std::vector<int>> member_of;
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (VertexId y : cliques[c]) member_of[y].push_back(static_cast<int>(c));

  const auto k = cliques.size();
  std::vector<std::vector<int>> conflict(k);
  for (VertexId y : nb) {
    const auto it = member_of.find(y);
    if (it == member_of.end()) throw Error(ErrorKind::NotAStag, "neighbor outside every triangle");
    if (it->second.size() > 2) throw Error(ErrorKind::NotAStag, "neighbor in three maximal cliques");
    if (it->second.size() == 2) {
      const int a = it->second[0], b = it->second[1];
      conflict[static_cast<std::size_t>(a)].push_back(b);
      conflict[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  for (auto& row : conflict) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw Error(ErrorKind::NotAStag, "two maximal cliques share two neighbors");
  }

  // 2-color the conflict graph; parity 0 within a component is flipped as a unit
  std::vector<int> component(k, -1), parity(k, 0);
  int components = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (component[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    component[s] = components;
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      for (int d : conflict[c]) {
        const auto du = static_cast<std::size_t>(d);
        if (component[du] == -1) {
          component[du] = components;
          parity[du] = 1 - parity[c];
          stack.push_back(du);
        } else if (parity[du] == parity[c]) {
          throw Error(ErrorKind::NotAStag, "clique conflicts are not bipartite");
        }
      }
    }
    ++components;
  }

  // a neighbor in a single clique needs that clique to be a cycle class;
  // flip f means cliques with parity == f are cycle classes
  std::vector<int> forced(static_cast<std::size_t>(components), -1);
  for (const auto& [y, list] : member_of) {
    if (list.size() != 1) continue;
    const auto c = static_cast<std::size_t>(list[0]);
    int& f = forced[static_cast<std::size_t>(component[c])];
    if (f != -1 && f != parity[c]) throw Error(ErrorKind::NotAStag, "no cycle role covers every neighbor");
    f = parity[c];
  }
  std::vector<int> free;
  for (int c = 0; c < components; ++c)
    if (forced[static_cast<std::size_t>(c)] == -1) free.push_back(c);
  if (free.size() > kMaxFreeComponents)
    throw Error(ErrorKind::TooLarge, "too many ambiguous clique roles around one vertex");

  std::vector<NeighborhoodOption> out;
  for (unsigned bits = 0; bits < (1u << free.size()); ++bits) {
    std::vector<int> flip = forced;
    for (std::size_t i = 0; i < free.size(); ++i)
      flip[static_cast<std::size_t>(free[i])] = static_cast<int>((bits >> i) & 1u);
    NeighborhoodOption opt;
    std::set<VertexId> in_cut;
    for (std::size_t c = 0; c < k; ++c) {
      if (parity[c] == flip[static_cast<std::size_t>(component[c])]) {
        opt.cycle_classes.push_back(cliques[c]);
      } else {
        opt.cut_classes.push_back(cliques[c]);
        in_cut.insert(cliques[c].begin(), cliques[c].end());
      }
    }
    for (VertexId y : nb)
      if (!in_cut.contains(y)) opt.cut_classes.push_back({y});
    std::sort(opt.cut_classes.begin(), opt.cut_classes.end());
    std::sort(opt.cycle_classes.begin(), opt.cycle_classes.end());
    out.push_back(std::move(opt));
  }
  std::sort(out.begin(), out.end(), [](const NeighborhoodOption& a, const NeighborhoodOption& b) {
    return std::tie(a.cut_classes, a.cycle_classes) < std::tie(b.cut_classes, b.cycle_classes);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::stable_sort(out.begin(), out.end(), [](const NeighborhoodOption& a, const NeighborhoodOption& b) {
    return std::make_pair(a.n(), a.m()) < std::make_pair(b.n(), b.m());
  });
  return out;
}

VertexId pick_anchor(const Graph& h, const Rows& rows) {
  VertexId best = 0;
  std::vector<int> best_sig;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    std::vector<int> sig{h.degree(v)};
    std::vector<int> around;
    for (VertexId w : rows[static_cast<std::size_t>(v)]) around.push_back(h.degree(w));
    std::sort(around.begin(), around.end());
    sig.insert(sig.end(), around.begin(), around.end());
    if (v == 0 || sig < best_sig) {
      best = v;
      best_sig = std::move(sig);
    }
  }
  return best;
}

// Rooted trees on n vertices as level sequences (Beyer-Hedetniemi order).
class LevelSequences {
 public:
  explicit LevelSequences(int n) : level_(static_cast<std::size_t>(n)) {
    std::iota(level_.begin(), level_.end(), 0);
  }
  const std::vector<int>& current() const { return level_; }
  bool next() {
    int p = static_cast<int>(level_.size()) - 1;
    while (p > 0 && level_[static_cast<std::size_t>(p)] <= 1) --p;
    if (p <= 0) return false;
    int q = p - 1;
    while (level_[static_cast<std::size_t>(q)] != level_[static_cast<std::size_t>(p)] - 1) --q;
    for (std::size_t i = static_cast<std::size_t>(p); i < level_.size(); ++i)
      level_[i] = level_[i - static_cast<std::size_t>(p - q)];
    return true;
  }

 private:
  std::vector<int> level_;
};

class LayoutSearch {
 public:
  LayoutSearch(const std::vector<LabeledTreeEdge>& items, int n,
               const std::function<bool(const ExplicitTree&)>& visit, std::size_t budget)
      : items_(items), n_(n), visit_(visit), budget_(budget) {
    for (const auto& it : items_)
      for (int c : it.label) cycles_ = std::max(cycles_, c + 1);
  }

  bool run() {
    if (static_cast<int>(items_.size()) != n_ - 1) return false;
    if (n_ == 1) return visit_(ExplicitTree{1, {}, {}});
    LevelSequences seq(n_);
    do {
      const auto& level = seq.current();
      parent_.assign(static_cast<std::size_t>(n_), -1);
      for (int i = 1; i < n_; ++i) {
        int j = i - 1;
        while (level[static_cast<std::size_t>(j)] != level[static_cast<std::size_t>(i)] - 1) --j;
        parent_[static_cast<std::size_t>(i)] = j;
      }
      degree_.assign(static_cast<std::size_t>(cycles_ * n_), 0);
      used_count_.assign(static_cast<std::size_t>(cycles_), 0);
      used_.assign(items_.size(), false);
      item_at_.assign(static_cast<std::size_t>(n_), -1);
      if (place(1)) return true;
    } while (seq.next());
    return false;
  }

 private:
  int& deg(int c, int v) { return degree_[static_cast<std::size_t>(c * n_ + v)]; }

  bool place(int pos) {
    if (pos == n_) return emit();
    const int p = parent_[static_cast<std::size_t>(pos)];
    std::vector<const std::vector<int>*> tried;
    for (std::size_t j = 0; j < items_.size(); ++j) {
      if (used_[j]) continue;
      const auto& label = items_[j].label;
      if (std::any_of(tried.begin(), tried.end(), [&](const auto* t) { return *t == label; })) continue;
      tried.push_back(&label);
      if (++nodes_ > budget_) throw Error(ErrorKind::TooLarge, "tree layout search exceeded its node budget");
      // paths stay connected: every tree path between placed edges is already placed
      const bool fits = std::all_of(label.begin(), label.end(), [&](int c) {
        const int d = deg(c, p);
        return used_count_[static_cast<std::size_t>(c)] == 0 ? d == 0 : d == 1;
      });
      if (!fits) continue;
      for (int c : label) {
        ++deg(c, p);
        ++deg(c, pos);
        ++used_count_[static_cast<std::size_t>(c)];
      }
      used_[j] = true;
      item_at_[static_cast<std::size_t>(pos)] = static_cast<int>(j);
      if (place(pos + 1)) return true;
      used_[j] = false;
      for (int c : label) {
        --deg(c, p);
        --deg(c, pos);
        --used_count_[static_cast<std::size_t>(c)];
      }
    }
    return false;
  }

  bool emit() {
    ExplicitTree t;
    t.n = n_;
    t.items = items_;
    t.edges.assign(items_.size(), {0, 0});
    for (int pos = 1; pos < n_; ++pos)
      t.edges[static_cast<std::size_t>(item_at_[static_cast<std::size_t>(pos)])] = {
          parent_[static_cast<std::size_t>(pos)], pos};
    return visit_(t);
  }

  const std::vector<LabeledTreeEdge>& items_;
  int n_;
  const std::function<bool(const ExplicitTree&)>& visit_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  int cycles_ = 0;
  std::vector<int> parent_, degree_, used_count_, item_at_;
  std::vector<bool> used_;
};

// Per cycle id, the tree edges carrying it; nullopt unless each is a path.
std::optional<std::vector<std::pair<VertexId, VertexId>>> path_ends(const ExplicitTree& t) {
  int cycles = 0;
  for (const auto& it : t.items)
    for (int c : it.label) cycles = std::max(cycles, c + 1);
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(cycles), std::vector<int>(static_cast<std::size_t>(t.n), 0));
  std::vector<int> edges(static_cast<std::size_t>(cycles), 0);
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    for (int c : t.items[i].label) {
      ++deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(t.edges[i].first)];
      ++deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(t.edges[i].second)];
      ++edges[static_cast<std::size_t>(c)];
    }
  }
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (int c = 0; c < cycles; ++c) {
    std::vector<VertexId> odd;
    int touched = 0;
    for (VertexId v = 0; v < t.n; ++v) {
      const int d = deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
      if (d > 2) return std::nullopt;
      if (d > 0) ++touched;
      if (d == 1) odd.push_back(v);
    }
    // in a tree, k edges on k + 1 vertices are connected
    if (edges[static_cast<std::size_t>(c)] == 0 || touched != edges[static_cast<std::size_t>(c)] + 1 || odd.size() != 2)
      return std::nullopt;
    ends.emplace_back(odd[0], odd[1]);
  }
  return ends;
}

bool realizes(const Graph& g, const Graph& h) {
  if (!is_connected(g)) return false;
  if (count_spanning_trees(g) != h.vertex_count()) return false;
  const auto aux = build_stag(g, static_cast<std::size_t>(h.vertex_count()));
  return are_isomorphic(aux.graph, h);
}

bool is_complete(const Graph& h) {
  const auto n = static_cast<long long>(h.vertex_count());
  return static_cast<long long>(h.edge_count()) == n * (n - 1) / 2;
}

std::pair<Graph, int> invert_impl(const Graph& h) {
  if (h.vertex_count() == 0) throw Error(ErrorKind::NotAStag, "empty candidate");
  if (!is_connected(h)) throw Error(ErrorKind::NotAStag, "candidate is disconnected");
  const Factorization f = prime_factorize(h);
  Graph result(1);
  for (const auto& factor : f.factors) {
    const Graph block = invert_prime(factor);
    std::vector<VertexId> image(static_cast<std::size_t>(block.vertex_count()), 0);
    for (VertexId v = 1; v < block.vertex_count(); ++v)
      image[static_cast<std::size_t>(v)] = result.add_vertex(std::to_string(result.vertex_count()));
    for (const auto& e : block.edges())
      result.add_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]);
  }
  if (!realizes(result, h)) throw Error(ErrorKind::NotAStag, "assembled preimage failed verification");
  return {std::move(result), static_cast<int>(f.factors.size())};
}

}  // namespace

std::vector<VertexId> extend_to_maximal_clique(const Graph& h, const std::vector<VertexId>& seed) {
  if (seed.size() < 2) throw Error(ErrorKind::InvalidArgument, "clique seed needs at least two vertices");
  const auto rows = h.sorted_neighbors();
  for (VertexId v : seed)
    if (v < 0 || v >= h.vertex_count()) throw Error(ErrorKind::InvalidArgument, "seed vertex out of range");
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (!linked(rows, seed[i], seed[j])) throw Error(ErrorKind::InvalidArgument, "seed is not a clique");
  return extend_clique(rows, seed);
}

std::vector<NeighborhoodOption> neighborhood_options(const Graph& h, VertexId x) {
  if (x < 0 || x >= h.vertex_count()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  return options_at(h.sorted_neighbors(), x);
}

NeighborhoodOption recover_neighborhood_partitions(const Graph& h, VertexId x) {
  return neighborhood_options(h, x).front();
}

std::vector<InferredParams> infer_param_candidates(const Graph& h) {
  if (h.vertex_count() == 0) throw Error(ErrorKind::NotAStag, "empty candidate");
  const auto rows = h.sorted_neighbors();
  std::vector<std::vector<NeighborhoodOption>> all;
  std::set<std::pair<int, int>> pairs;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto opts = options_at(rows, v);
    std::set<std::pair<int, int>> here;
    for (const auto& o : opts) {
      const long long n = o.n();
      if (o.m() >= n - 1 && o.m() <= n * (n - 1) / 2) here.emplace(o.n(), o.m());
    }
    if (v == 0) {
      pairs = std::move(here);
    } else {
      std::set<std::pair<int, int>> keep;
      std::set_intersection(pairs.begin(), pairs.end(), here.begin(), here.end(), std::inserter(keep, keep.end()));
      pairs = std::move(keep);
    }
    if (pairs.empty()) throw Error(ErrorKind::NotAStag, "vertices disagree on the preimage size");
    all.push_back(std::move(opts));
  }
  const VertexId anchor = pick_anchor(h, rows);
  std::vector<InferredParams> out;
  for (const auto& [n, m] : pairs) {
    InferredParams p;
    p.n = n;
    p.m = m;
    p.anchor = anchor;
    for (const auto& opts : all) {
      std::vector<NeighborhoodOption> match;
      for (const auto& o : opts)
        if (o.n() == n && o.m() == m) match.push_back(o);
      p.per_vertex.push_back(std::move(match));
    }
    out.push_back(std::move(p));
  }
  return out;
}

InferredParams infer_params(const Graph& h) { return infer_param_candidates(h).front(); }

std::vector<LabeledTreeEdge> label_cut_cliques(const NeighborhoodOption& option) {
  std::map<VertexId, int> cycle_of;
  for (std::size_t c = 0; c < option.cycle_classes.size(); ++c)
    for (VertexId y : option.cycle_classes[c]) cycle_of[y] = static_cast<int>(c);
  std::vector<LabeledTreeEdge> items;
  std::vector<std::vector<int>> carriers(option.cycle_classes.size());
  for (std::size_t i = 0; i < option.cut_classes.size(); ++i) {
    LabeledTreeEdge item;
    item.cut_clique_id = static_cast<int>(i);
    for (VertexId y : option.cut_classes[i]) {
      const auto it = cycle_of.find(y);
      if (it == cycle_of.end()) throw Error(ErrorKind::NotAStag, "cut class member outside every cycle class");
      item.label.push_back(it->second);
    }
    std::sort(item.label.begin(), item.label.end());
    if (std::adjacent_find(item.label.begin(), item.label.end()) != item.label.end())
      throw Error(ErrorKind::NotAStag, "cut class meets a cycle class twice");
    for (int c : item.label) carriers[static_cast<std::size_t>(c)].push_back(item.cut_clique_id);
    items.push_back(std::move(item));
  }
  auto sorted = carriers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::NotAStag, "two cycle classes label the same tree edges");
  return items;
}

std::vector<LabeledTreeEdge> label_cut_cliques(const InferredParams& params, VertexId x) {
  const auto& opts = params.per_vertex.at(static_cast<std::size_t>(x));
  if (opts.empty()) throw Error(ErrorKind::NotAStag, "no partition at this vertex matches the inferred size");
  return label_cut_cliques(opts.front());
}

bool layout_is_consistent(const ExplicitTree& t) {
  if (t.edges.size() != t.items.size() || static_cast<int>(t.edges.size()) != t.n - 1) return false;
  Graph tree(t.n);
  try {
    for (const auto& [u, v] : t.edges) tree.add_edge(u, v);
  } catch (const Error&) {
    return false;
  }
  if (!is_connected(tree)) return false;
  return path_ends(t).has_value();
}

bool for_each_layout(const std::vector<LabeledTreeEdge>& items, int n,
                     const std::function<bool(const ExplicitTree&)>& visit, std::size_t node_budget) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "layout needs at least one vertex");
  return LayoutSearch(items, n, visit, node_budget).run();
}

ExplicitTree layout_tree(const std::vector<LabeledTreeEdge>& items, int n) {
  std::optional<ExplicitTree> first;
  for_each_layout(items, n, [&](const ExplicitTree& t) {
    first = t;
    return true;
  });
  if (!first) throw Error(ErrorKind::NotAStag, "no tree realizes the labels as paths");
  return *first;
}

Graph add_chords(const ExplicitTree& t) {
  const auto ends = path_ends(t);
  if (!ends) throw Error(ErrorKind::NotAStag, "labels do not form paths");
  Graph g(t.n);
  for (const auto& [u, v] : t.edges) g.add_edge(u, v);
  for (const auto& [u, v] : *ends) {
    if (g.adjacent(u, v)) throw Error(ErrorKind::NotAStag, "chord duplicates an existing edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph invert_prime(const Graph& h) {
  if (h.vertex_count() == 0) throw Error(ErrorKind::NotAStag, "empty candidate");
  if (!is_connected(h)) throw Error(ErrorKind::NotAStag, "candidate is disconnected");
  if (h.vertex_count() == 1) return Graph(1);
  if (is_complete(h)) {
    if (h.vertex_count() == 2) throw Error(ErrorKind::NotAStag, "no simple graph has exactly two spanning trees");
    return cycle_graph(h.vertex_count());
  }
  for (const auto& params : infer_param_candidates(h)) {
    for (const auto& option : params.per_vertex[static_cast<std::size_t>(params.anchor)]) {
      std::vector<LabeledTreeEdge> items;
      try {
        items = label_cut_cliques(option);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAStag) throw;
        continue;
      }
      // any layout gives the same fundamental circuits, hence the same trees
      std::optional<Graph> candidate;
      for_each_layout(items, params.n, [&](const ExplicitTree& t) {
        try {
          candidate = add_chords(t);
          return true;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotAStag) throw;
          return false;
        }
      });
      if (candidate && realizes(*candidate, h)) return *candidate;
    }
  }
  throw Error(ErrorKind::NotAStag, "no reconstruction reproduces the candidate");
}

Graph invert(const Graph& h) { return invert_impl(h).first; }

InversionVerdict try_invert(const Graph& h) {
  InversionVerdict v;
  try {
    auto [g, factors] = invert_impl(h);
    v.is_stag = true;
    v.n = g.vertex_count();
    v.m = g.edge_count();
    v.factors = factors;
    v.verification = "iso";
    v.preimage = std::move(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAStag) throw;
    v.verification = "failed";
    v.reason = e.what();
  }
  return v;
}

std::vector<Graph> enumerate_preimages(const Graph& g_min, std::size_t budget) {
  if (!is_connected(g_min)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  if (!bridges(g_min).empty()) throw Error(ErrorKind::NotMinimal, "graph has a bridge");
  std::unordered_set<std::string> taken(g_min.names().begin(), g_min.names().end());
  std::vector<Graph> out;
  for (int length = 1; out.size() < budget; ++length) {
    for (VertexId v = 0; v < g_min.vertex_count() && out.size() < budget; ++v) {
      Graph g = g_min;
      auto fresh = taken;
      int counter = 0;
      VertexId last = v;
      for (int step = 0; step < length; ++step) {
        std::string name;
        do name = "p" + std::to_string(++counter);
        while (fresh.contains(name));
        fresh.insert(name);
        const VertexId w = g.add_vertex(name);
        g.add_edge(last, w);
        last = w;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace stag
