#include <bit>

#include "stag/kernels/symdiff.hpp"

namespace stag::kernels {

void symdiff_row_scalar(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                        std::size_t words, std::uint32_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * words;
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words; ++w) total += static_cast<std::uint32_t>(std::popcount(probe[w] ^ r[w]));
    out[i] = total;
  }
}

}  // namespace stag::kernels
