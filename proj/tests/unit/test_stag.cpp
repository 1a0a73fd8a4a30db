#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "stag/error.hpp"
#include "stag/generators.hpp"
#include "stag/isomorphism.hpp"
#include "stag/params.hpp"
#include "stag/stag.hpp"

using namespace stag;
using namespace stag::testing;

namespace {

std::vector<Graph> small_hosts() {
  std::vector<Graph> out;
  for (const auto& name : construction_fixtures()) out.push_back(fixture(name));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    out.push_back(random_connected_graph(n, std::min(n + static_cast<int>(seed % 3), n * (n - 1) / 2), seed));
  }
  return out;
}

std::size_t common_edges(const std::vector<const SpanningTree*>& ts) {
  std::vector<EdgeId> acc = ts[0]->edges();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    std::vector<EdgeId> next;
    std::set_intersection(acc.begin(), acc.end(), ts[i]->edges().begin(), ts[i]->edges().end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return acc.size();
}

}  // namespace

TEST_SUITE("stag") {
  TEST_CASE("small STAGs") {
    CHECK(are_isomorphic(build_stag(fixture("C3")).graph, complete_graph(3)));
    CHECK(build_stag(fixture("P3")).vertex_count() == 1);
    CHECK(build_stag(Graph(1)).vertex_count() == 1);
    for (int n = 3; n <= 7; ++n) CHECK(build_stag(cycle_graph(n)).graph == complete_graph(n));
  }

  TEST_CASE("fixture STAGs match the frozen values") {
    for (const auto& [name, want] : expected_values()) {
      CAPTURE(name);
      const StagGraph s = build_stag(fixture(name));
      CHECK(s.vertex_count() == want.trees);
      CHECK(s.graph.edge_count() == want.aux_edges);
      const auto degrees = s.graph.degree_sequence();
      CHECK(degrees.front() == want.max_degree);
      CHECK(degrees.back() == want.min_degree);
      CHECK(graph_diameter(s.graph) == want.diameter);
      std::size_t omega = 0;
      for (const auto& c : maximal_cliques(s.graph)) omega = std::max(omega, c.size());
      CHECK(static_cast<int>(omega) == want.clique_number);
    }
  }

  TEST_CASE("disconnected hosts are rejected") {
    try {
      build_stag(edge_list("a b\nc d"));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Disconnected);
    }
  }

  TEST_CASE("adjacency is exactly one exchange, vertex count is the tree count") {
    for (const auto& g : small_hosts()) {
      const StagGraph s = build_stag(g);
      CHECK(s.vertex_count() == count_spanning_trees(g));
      CHECK(graph_diameter(s.graph) <= g.vertex_count() - 1);
      for (VertexId i = 0; i < s.vertex_count(); ++i)
        for (VertexId j = i + 1; j < s.vertex_count(); ++j) {
          std::vector<EdgeId> d;
          const auto& a = s.trees[static_cast<std::size_t>(i)].edges();
          const auto& b = s.trees[static_cast<std::size_t>(j)].edges();
          std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
          CHECK(s.graph.adjacent(i, j) == (d.size() == 2));
        }
    }
  }

  TEST_CASE("neighborhood partition examples") {
    const StagGraph c3 = build_stag(fixture("C3"));
    for (VertexId v = 0; v < 3; ++v) {
      const auto p = neighborhood_partitions(c3, v);
      REQUIRE(p.cut_classes.size() == 2);
      CHECK(p.cut_classes[0].members.size() == 1);
      CHECK(p.cut_classes[1].members.size() == 1);
      REQUIRE(p.cycle_classes.size() == 1);
      CHECK(p.cycle_classes[0].members.size() == 2);
    }
    const StagGraph c4 = build_stag(fixture("C4"));
    const auto p4 = neighborhood_partitions(c4, 0);
    CHECK(p4.cut_classes.size() == 3);
    CHECK(p4.cycle_classes.size() == 1);
    CHECK(p4.cycle_classes[0].members.size() == 3);
    const auto tree = neighborhood_partitions(build_stag(fixture("P3")), 0);
    CHECK(tree.cycle_classes.empty());
    CHECK(tree.cut_classes.size() == 2);
    CHECK(std::all_of(tree.cut_classes.begin(), tree.cut_classes.end(),
                      [](const NeighborClass& c) { return c.members.empty(); }));
    CHECK_THROWS_AS(neighborhood_partitions(unannotated_stag(complete_graph(3)), 0), Error);
  }

  TEST_CASE("both partitions split every neighborhood with n-1 and m-n+1 classes") {
    for (const auto& g : small_hosts()) {
      const StagGraph s = build_stag(g);
      const auto nb = s.graph.sorted_neighbors();
      for (VertexId v = 0; v < s.vertex_count(); ++v) {
        const auto p = neighborhood_partitions(s, v);
        CHECK(static_cast<int>(p.cut_classes.size()) == g.vertex_count() - 1);
        CHECK(static_cast<int>(p.cycle_classes.size()) == g.edge_count() - g.vertex_count() + 1);
        for (const auto* classes : {&p.cut_classes, &p.cycle_classes}) {
          std::vector<VertexId> all;
          for (const auto& c : *classes) all.insert(all.end(), c.members.begin(), c.members.end());
          std::sort(all.begin(), all.end());
          CHECK(all == nb[static_cast<std::size_t>(v)]);
        }
        for (const auto& c : p.cycle_classes) CHECK(c.members.size() >= 2);
      }
    }
  }

  TEST_CASE("ground truth clique examples") {
    const auto c4 = ground_truth_cliques(build_stag(fixture("C4")));
    int cycles = 0;
    for (const auto& k : c4) {
      if (k.tag == CliqueTag::Cycle) {
        ++cycles;
        CHECK(k.size() == 4);
      } else {
        CHECK(k.size() == 2);
      }
    }
    CHECK(cycles == 1);
    std::set<std::pair<CliqueTag, int>> kinds;
    for (const auto& k : ground_truth_cliques(build_stag(fixture("K4")))) kinds.emplace(k.tag, k.size());
    CHECK(kinds.contains({CliqueTag::Cycle, 3}));
    CHECK(kinds.contains({CliqueTag::Cycle, 4}));
    CHECK(kinds.contains({CliqueTag::Cut, 3}));
    CHECK(ground_truth_cliques(build_stag(fixture("P3"))).empty());
  }

  TEST_CASE("maximal cliques of size three or more are the ground truth cliques") {
    for (const auto& g : small_hosts()) {
      const StagGraph s = build_stag(g);
      std::set<std::vector<VertexId>> generic;
      for (const auto& c : maximal_cliques(s.graph))
        if (c.size() >= 3) generic.insert(c);
      std::set<std::vector<VertexId>> truth;
      for (const auto& k : ground_truth_cliques(s)) {
        if (k.size() < 3) continue;
        truth.insert(k.members);
        // the tag follows the common-edge count of the trees
        std::vector<const SpanningTree*> ts;
        for (VertexId v : k.members) ts.push_back(&s.trees[static_cast<std::size_t>(v)]);
        const auto shared = static_cast<int>(common_edges(ts));
        CHECK(shared == (k.tag == CliqueTag::Cycle ? g.vertex_count() - 2 - (k.size() - 2) : g.vertex_count() - 2));
      }
      CHECK(generic == truth);
    }
  }

  TEST_CASE("triangles share n-3 or n-2 edges, by tag") {
    for (const auto& g : small_hosts()) {
      const StagGraph s = build_stag(g);
      const int n = g.vertex_count();
      std::set<std::vector<VertexId>> cycle_cliques;
      for (const auto& k : ground_truth_cliques(s))
        if (k.tag == CliqueTag::Cycle) cycle_cliques.insert(k.members);
      const auto nb = s.graph.sorted_neighbors();
      for (VertexId a = 0; a < s.vertex_count(); ++a)
        for (VertexId b : nb[static_cast<std::size_t>(a)])
          for (VertexId c : nb[static_cast<std::size_t>(b)]) {
            if (!(a < b && b < c) || !s.graph.adjacent(a, c)) continue;
            const auto shared = static_cast<int>(common_edges({&s.trees[static_cast<std::size_t>(a)],
                                                               &s.trees[static_cast<std::size_t>(b)],
                                                               &s.trees[static_cast<std::size_t>(c)]}));
            CHECK((shared == n - 3 || shared == n - 2));
            const bool in_cycle = std::any_of(cycle_cliques.begin(), cycle_cliques.end(), [&](const auto& k) {
              return std::binary_search(k.begin(), k.end(), a) && std::binary_search(k.begin(), k.end(), b) &&
                     std::binary_search(k.begin(), k.end(), c);
            });
            CHECK(in_cycle == (shared == n - 3));
          }
    }
  }

  TEST_CASE("serialization") {
    const StagGraph s = build_stag(fixture("C3"));
    const auto j = nlohmann::json::parse(stag_to_json(s));
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edges"].size() == 3);
    CHECK(j["vertices"][0] == nlohmann::json::array({0, 1}));
    CHECK(nlohmann::json::parse(stag_to_json(unannotated_stag(complete_graph(2))))["vertices"][0].is_null());
    CHECK(stag_to_dot(s).find("tooltip") != std::string::npos);
  }
}
