#include "stag/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "stag/error.hpp"

namespace stag {
namespace {

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, long max_nodes)
      : g1_(g1), g2_(g2), n_(g1.vertex_count()), max_nodes_(max_nodes) {
    adj_.resize(static_cast<std::size_t>(2 * n_));
    for (const auto& e : g1.edges()) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (const auto& e : g2.edges()) {
      adj_[static_cast<std::size_t>(n_ + e.u)].push_back(n_ + e.v);
      adj_[static_cast<std::size_t>(n_ + e.v)].push_back(n_ + e.u);
    }
  }

  std::optional<std::vector<VertexId>> run() {
    std::vector<int> color(static_cast<std::size_t>(2 * n_));
    for (int v = 0; v < 2 * n_; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    return search(std::move(color));
  }

 private:
  // Refines to a stable coloring with canonical ranks. Returns false if some
  // color class is unbalanced between the two sides.
  bool refine(std::vector<int>& color) const {
    const auto total = static_cast<std::size_t>(2 * n_);
    std::vector<std::vector<int>> keys(total);
    std::vector<int> order(total);
    int classes = -1;
    while (true) {
      for (std::size_t v = 0; v < total; ++v) {
        auto& k = keys[v];
        k.clear();
        k.push_back(color[v]);
        for (int w : adj_[v]) k.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(k.begin() + 1, k.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
      });
      int rank = 0;
      for (std::size_t i = 0; i < total; ++i) {
        if (i > 0 && keys[static_cast<std::size_t>(order[i])] != keys[static_cast<std::size_t>(order[i - 1])])
          ++rank;
        color[static_cast<std::size_t>(order[i])] = rank;
      }
      if (rank + 1 == classes) break;
      classes = rank + 1;
    }
    std::vector<int> balance(static_cast<std::size_t>(classes), 0);
    for (int v = 0; v < n_; ++v) ++balance[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    for (int v = n_; v < 2 * n_; ++v) --balance[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
  }

  std::optional<std::vector<VertexId>> search(std::vector<int> color) {
    if (++nodes_ > max_nodes_)
      throw Error(ErrorKind::TooLarge, "isomorphism search exceeded its node budget");
    if (!refine(color)) return std::nullopt;

    const int classes = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    int target = -1;
    for (int c = 0; c < classes; ++c) {
      const int s = size[static_cast<std::size_t>(c)];
      if (s > 1 && (target == -1 || s < size[static_cast<std::size_t>(target)])) target = c;
    }

    if (target == -1) {
      std::vector<VertexId> by_color(static_cast<std::size_t>(classes), -1);
      for (int w = 0; w < n_; ++w) by_color[static_cast<std::size_t>(color[static_cast<std::size_t>(n_ + w)])] = w;
      std::vector<VertexId> mapping(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v)
        mapping[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
      if (is_isomorphism(g1_, g2_, mapping)) return mapping;
      return std::nullopt;
    }

    int pivot = 0;
    while (color[static_cast<std::size_t>(pivot)] != target) ++pivot;
    for (int w = n_; w < 2 * n_; ++w) {
      if (color[static_cast<std::size_t>(w)] != target) continue;
      auto next = color;
      next[static_cast<std::size_t>(pivot)] = classes;
      next[static_cast<std::size_t>(w)] = classes;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  const Graph& g1_;
  const Graph& g2_;
  int n_;
  long max_nodes_;
  long nodes_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<VertexId>& mapping) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      static_cast<int>(mapping.size()) != n)
    return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (VertexId w : mapping) {
    if (w < 0 || w >= n || hit[static_cast<std::size_t>(w)]) return false;
    hit[static_cast<std::size_t>(w)] = true;
  }
  const auto nb2 = g2.sorted_neighbors();
  for (const auto& e : g1.edges()) {
    const auto& row = nb2[static_cast<std::size_t>(mapping[static_cast<std::size_t>(e.u)])];
    if (!std::binary_search(row.begin(), row.end(), mapping[static_cast<std::size_t>(e.v)])) return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                      const IsomorphismLimits& limits) {
  if (g1.vertex_count() > limits.max_vertices || g2.vertex_count() > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, "isomorphism test beyond " +
                                         std::to_string(limits.max_vertices) + " vertices");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      g1.degree_sequence() != g2.degree_sequence())
    return std::nullopt;
  if (g1.vertex_count() == 0) return std::vector<VertexId>{};
  return Matcher(g1, g2, limits.max_search_nodes).run();
}

}  // namespace stag
