#include "partycred/kernels.hpp"

#include <cstddef>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PARTYCRED_HAVE_X86 1
#else
#define PARTYCRED_HAVE_X86 0
#endif

namespace partycred::kernels::avx2 {

#if PARTYCRED_HAVE_X86

__attribute__((target("avx2"))) void pairwise_accumulate(std::span<std::int64_t> matrix,
                                                         std::span<const std::int32_t> positions,
                                                         std::int64_t weight) {
  const std::size_t m = positions.size();
  const std::int32_t* pos = positions.data();
  const __m256i w = _mm256_set1_epi64x(weight);
  for (std::size_t c = 0; c < m; ++c) {
    const std::int32_t rc = pos[c];
    const __m256i rank = _mm256_set1_epi64x(rc);
    std::int64_t* row = matrix.data() + c * m;
    std::size_t d = 0;
    for (; d + 4 <= m; d += 4) {
      const __m128i p32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(pos + d));
      const __m256i p64 = _mm256_cvtepi32_epi64(p32);
      const __m256i below = _mm256_cmpgt_epi64(p64, rank);
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + d));
      acc = _mm256_add_epi64(acc, _mm256_and_si256(below, w));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + d), acc);
    }
    for (; d < m; ++d) {
      if (rc < pos[d]) row[d] += weight;
    }
  }
}

__attribute__((target("avx2"))) SignCounts count_signs(std::span<const std::int64_t> values,
                                                       std::int64_t skip) {
  const std::size_t n = values.size();
  const std::int64_t* v = values.data();
  const __m256i zero = _mm256_setzero_si256();
  __m256i pos_acc = _mm256_setzero_si256();
  __m256i zero_acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    // Comparison masks are all-ones (-1) per hit lane, so subtracting counts them.
    pos_acc = _mm256_sub_epi64(pos_acc, _mm256_cmpgt_epi64(x, zero));
    zero_acc = _mm256_sub_epi64(zero_acc, _mm256_cmpeq_epi64(x, zero));
  }
  alignas(32) std::int64_t lanes[4];
  SignCounts out;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), pos_acc);
  out.positive = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), zero_acc);
  out.zero = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    if (v[i] > 0) {
      ++out.positive;
    } else if (v[i] == 0) {
      ++out.zero;
    }
  }
  if (skip >= 0 && static_cast<std::size_t>(skip) < n) {
    if (v[skip] > 0) {
      --out.positive;
    } else if (v[skip] == 0) {
      --out.zero;
    }
  }
  return out;
}

#else

void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight) {
  scalar::pairwise_accumulate(matrix, positions, weight);
}

SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip) {
  return scalar::count_signs(values, skip);
}

#endif

}  // namespace partycred::kernels::avx2
