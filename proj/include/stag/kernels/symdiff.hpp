#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "stag/spanning_trees.hpp"

namespace stag::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// out[i] = popcount(probe XOR rows[i]) over `words` 64-bit words per row.
using SymdiffRowFn = void (*)(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                              std::size_t words, std::uint32_t* out);

void symdiff_row_scalar(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                        std::size_t words, std::uint32_t* out);
#if defined(STAG_HAVE_AVX2_KERNEL)
void symdiff_row_avx2(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                      std::size_t words, std::uint32_t* out);
#endif
#if defined(STAG_HAVE_NEON_KERNEL)
void symdiff_row_neon(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                      std::size_t words, std::uint32_t* out);
#endif

/// Compiled in and supported by this CPU.
bool available(Isa isa);
/// Every available ISA, scalar first.
std::vector<Isa> available_isas();
/// Best available ISA, chosen once at first use. STAG_KERNEL=scalar|avx2|neon
/// in the environment overrides the choice when that ISA is available.
Isa active_isa();
/// Throws Error(InvalidArgument) when the ISA is not available.
SymdiffRowFn symdiff_row_for(Isa isa);
/// Dispatches to active_isa().
void symdiff_row(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count, std::size_t words,
                 std::uint32_t* out);

/// Edge-indicator bitmasks of spanning trees, one padded row per tree.
struct PackedTrees {
  std::size_t words = 0;
  std::size_t count = 0;
  std::vector<std::uint64_t> data;

  const std::uint64_t* row(std::size_t i) const { return data.data() + i * words; }
};

PackedTrees pack_trees(const std::vector<SpanningTree>& trees, int edge_count);

}  // namespace stag::kernels
