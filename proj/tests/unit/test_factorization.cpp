#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/factorization.hpp"
#include "stag/generators.hpp"
#include "stag/isomorphism.hpp"
#include "stag/product.hpp"
#include "stag/stag.hpp"

using namespace stag;
using namespace stag::testing;

namespace {

// Factor lists agree as multisets up to isomorphism.
bool same_factors(std::vector<Graph> a, std::vector<Graph> b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a) {
    const auto it = std::find_if(b.begin(), b.end(), [&](const Graph& g) { return are_isomorphic(f, g); });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_SUITE("factorization") {
  TEST_CASE("small factorizations") {
    const auto c4 = prime_factorize(cycle_graph(4));
    REQUIRE(c4.factors.size() == 2);
    CHECK(are_isomorphic(c4.factors[0], path_graph(2)));
    CHECK(are_isomorphic(c4.factors[1], path_graph(2)));
    CHECK(prime_factorize(complete_graph(3)).factors.size() == 1);
    const auto bowtie = prime_factorize(build_stag(fixture("bowtie")).graph);
    CHECK(same_factors(bowtie.factors, {complete_graph(3), complete_graph(3)}));
    CHECK(prime_factorize(Graph(1)).factors.empty());
  }

  TEST_CASE("primality") {
    CHECK(is_prime(build_stag(fixture("K4")).graph));
    CHECK_FALSE(is_prime(cartesian_product(path_graph(2), complete_graph(3))));
    CHECK(is_prime(Graph(1)));
    CHECK(is_prime(fixture("petersen")));
    try {
      is_prime(edge_list("a b\nc d"));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Disconnected);
    }
  }

  TEST_CASE("factors are ordered by size and carry coordinates") {
    const Graph g = cartesian_product(cartesian_product(path_graph(2), cycle_graph(5)), complete_graph(3));
    const auto f = prime_factorize(g);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].vertex_count() == 5);
    CHECK(f.factors[1].vertex_count() == 3);
    CHECK(f.factors[2].vertex_count() == 2);
    CHECK(verify_factorization(g, f));
  }

  TEST_CASE("hypercubes and grids") {
    Graph q = path_graph(2);
    for (int i = 0; i < 4; ++i) q = cartesian_product(q, path_graph(2));
    CHECK(prime_factorize(q).factors.size() == 5);
    const auto grid = prime_factorize(cartesian_product(path_graph(4), path_graph(3)));
    CHECK(same_factors(grid.factors, {path_graph(4), path_graph(3)}));
  }

  TEST_CASE("block product examples") {
    CHECK(are_isomorphic(product_of_block_stags(fixture("bowtie")).graph,
                         cartesian_product(complete_graph(3), complete_graph(3))));
    CHECK(product_of_block_stags(fixture("P3")).vertex_count() == 1);
    CHECK(are_isomorphic(product_of_block_stags(fixture("tri_pendant")).graph, complete_graph(3)));
    CHECK(are_isomorphic(build_stag(fixture("tri_pendant")).graph, complete_graph(3)));
    CHECK_FALSE(product_of_block_stags(fixture("bowtie")).annotated());
  }

  TEST_CASE("STAGs of multi-block graphs are products of block STAGs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = random_multi_block_graph(8, seed);
      CHECK(are_isomorphic(build_stag(g, 2000).graph, product_of_block_stags(g, 2000).graph));
    }
  }

  TEST_CASE("STAGs of 2-connected graphs are prime") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const int n = 3 + static_cast<int>(seed % 4);
      const int m = n + static_cast<int>(seed % static_cast<std::uint64_t>(n * (n - 1) / 2 - n + 1));
      CHECK(is_prime(build_stag(random_two_connected_graph(n, m, seed)).graph));
    }
  }

  TEST_CASE("triangles of a product lie in one coordinate direction") {
    const Graph p = cartesian_product(complete_graph(4), fixture("diamond"));
    const auto f = prime_factorize(p);
    const auto nb = p.sorted_neighbors();
    auto direction = [&](VertexId a, VertexId b) {
      for (std::size_t i = 0; i < f.factors.size(); ++i)
        if (f.coordinates[static_cast<std::size_t>(a)][i] != f.coordinates[static_cast<std::size_t>(b)][i])
          return static_cast<int>(i);
      return -1;
    };
    for (VertexId a = 0; a < p.vertex_count(); ++a)
      for (VertexId b : nb[static_cast<std::size_t>(a)])
        for (VertexId c : nb[static_cast<std::size_t>(b)])
          if (a < b && b < c && p.adjacent(a, c)) {
            CHECK(direction(a, b) == direction(b, c));
            CHECK(direction(a, b) == direction(a, c));
          }
  }

  TEST_CASE("factorizing a product of primes recovers them") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph a = random_two_connected_graph(4 + static_cast<int>(seed % 2), 5, seed);
      const Graph b = random_connected_graph(4, 3 + static_cast<int>(seed % 4), seed + 50);
      const auto fa = prime_factorize(a), fb = prime_factorize(b);
      auto want = fa.factors;
      want.insert(want.end(), fb.factors.begin(), fb.factors.end());
      const auto got = prime_factorize(cartesian_product(a, b));
      CHECK(same_factors(got.factors, want));
      CHECK(verify_factorization(cartesian_product(a, b), got));
    }
  }

  TEST_CASE("every random connected graph factorizes verifiably") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int n = 2 + static_cast<int>(seed % 9);
      const Graph g = random_connected_graph(n, std::min(n - 1 + static_cast<int>(seed % 7), n * (n - 1) / 2), seed);
      CHECK(verify_factorization(g, prime_factorize(g)));
    }
    for (const auto* name : {"petersen", "theta", "K5", "diamond"}) CHECK(is_prime(fixture(name)));
    CHECK(is_prime(edge_list("a x\na y\nb x\nb y\nc x\nc y")));  // K_{2,3}
  }
}
