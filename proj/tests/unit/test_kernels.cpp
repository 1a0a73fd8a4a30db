#include <algorithm>
#include <bit>

#include "doctest.h"
#include "fixtures.hpp"
#include "stag/generators.hpp"
#include "stag/kernels/symdiff.hpp"
#include "stag/spanning_trees.hpp"

using namespace stag;
using namespace stag::kernels;

TEST_SUITE("kernels") {
  TEST_CASE("every available kernel matches the scalar one") {
    Rng rng(11);
    for (std::size_t words = 1; words <= 6; ++words) {
      for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
        std::vector<std::uint64_t> probe(words), rows(words * count);
        for (auto& w : probe) w = rng.below(~std::uint64_t{0});
        for (auto& w : rows) w = rng.below(~std::uint64_t{0});
        std::vector<std::uint32_t> want(count);
        symdiff_row_scalar(probe.data(), rows.data(), count, words, want.data());
        for (std::size_t i = 0; i < count; ++i) {
          std::uint32_t manual = 0;
          for (std::size_t w = 0; w < words; ++w) manual += static_cast<std::uint32_t>(std::popcount(probe[w] ^ rows[i * words + w]));
          CHECK(want[i] == manual);
        }
        for (Isa isa : available_isas()) {
          CAPTURE(to_string(isa));
          std::vector<std::uint32_t> got(count, 12345);
          symdiff_row_for(isa)(probe.data(), rows.data(), count, words, got.data());
          CHECK(got == want);
        }
      }
    }
  }

  TEST_CASE("dispatch") {
    const auto isas = available_isas();
    CHECK(isas.front() == Isa::Scalar);
    CHECK(std::find(isas.begin(), isas.end(), active_isa()) != isas.end());
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (!available(isa)) CHECK_THROWS(symdiff_row_for(isa));
  }

  TEST_CASE("packed trees give symmetric differences") {
    const Graph k5 = testing::fixture("K5");
    const auto trees = enumerate_spanning_trees(k5);
    const auto packed = pack_trees(trees, k5.edge_count());
    CHECK(packed.words == 1);
    std::vector<std::uint32_t> diff(packed.count);
    symdiff_row(packed.row(0), packed.data.data(), packed.count, packed.words, diff.data());
    for (std::size_t j = 0; j < trees.size(); ++j) {
      std::vector<EdgeId> d;
      std::set_symmetric_difference(trees[0].edges().begin(), trees[0].edges().end(), trees[j].edges().begin(),
                                    trees[j].edges().end(), std::back_inserter(d));
      CHECK(diff[j] == d.size());
    }
    const Graph wide = random_connected_graph(14, 70, 3);
    const auto one = pack_trees({dfs_spanning_tree(wide)}, wide.edge_count());
    CHECK(one.words == 2);
  }
}
