#include <arm_neon.h>

#include <bit>

#include "stag/kernels/symdiff.hpp"

namespace stag::kernels {

void symdiff_row_neon(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                      std::size_t words, std::uint32_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * words;
    std::uint32_t total = 0;
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) {
      const uint64x2_t x = veorq_u64(vld1q_u64(probe + w), vld1q_u64(r + w));
      total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(x)));
    }
    for (; w < words; ++w) total += static_cast<std::uint32_t>(std::popcount(probe[w] ^ r[w]));
    out[i] = total;
  }
}

}  // namespace stag::kernels
