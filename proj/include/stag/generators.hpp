#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "stag/graph.hpp"

namespace stag {

/// Seeded source whose draws are identical on every platform (the standard
/// distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

/// Random spanning tree plus random extra edges; vertices relabeled at random.
/// Throws Error(InvalidArgument) unless n >= 1 and n-1 <= m <= n(n-1)/2.
Graph random_connected_graph(int n, int m, std::uint64_t seed);

/// A cycle grown by ear additions to exactly n vertices and m edges; vertices
/// relabeled at random. Throws Error(InvalidArgument) unless n >= 3 and
/// n <= m <= n(n-1)/2.
Graph random_two_connected_graph(int n, int m, std::uint64_t seed);

/// At least two blocks (2-connected pieces and bridges) glued at random
/// vertices, at most max_n vertices and at most max_trees spanning trees.
/// Throws Error(InvalidArgument) unless max_n >= 4.
Graph random_multi_block_graph(int max_n, std::uint64_t seed, std::size_t max_trees = 2000);

}  // namespace stag
