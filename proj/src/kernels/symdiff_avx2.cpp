#include <immintrin.h>

#include <bit>

#include "stag/kernels/symdiff.hpp"

namespace stag::kernels {
namespace {

// Per-64-bit-lane popcount via nibble lookup.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_shuffle_epi8(table, _mm256_and_si256(v, low));
  const __m256i hi = _mm256_shuffle_epi8(table, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
  return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

}  // namespace

void symdiff_row_avx2(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count,
                      std::size_t words, std::uint32_t* out) {
  if (words == 1) {
    // four rows per vector
    const __m256i p = _mm256_set1_epi64x(static_cast<long long>(probe[0]));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
      alignas(32) std::uint64_t lanes[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_lanes(_mm256_xor_si256(p, r)));
      for (std::size_t k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint32_t>(lanes[k]);
    }
    for (; i < count; ++i) out[i] = static_cast<std::uint32_t>(std::popcount(probe[0] ^ rows[i]));
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * words;
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(probe + w));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + w));
      acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_xor_si256(a, b)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; w < words; ++w) total += static_cast<std::uint64_t>(std::popcount(probe[w] ^ r[w]));
    out[i] = static_cast<std::uint32_t>(total);
  }
}

}  // namespace stag::kernels
