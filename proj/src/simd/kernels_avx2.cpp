// Compiled with -mavx2 only (no -mfma): multiply and add stay separate so
// results match the scalar kernels bit for bit.

#include <immintrin.h>

#include <bit>

#include "ptcomp/simd/kernels.hpp"

namespace ptcomp::simd::avx2 {

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    const __m256d p0 = _mm256_mul_pd(a, _mm256_loadu_pd(x + i));
    const __m256d p1 = _mm256_mul_pd(a, _mm256_loadu_pd(x + i + 4));
    _mm256_storeu_pd(y + i, _mm256_add_pd(y0, p0));
    _mm256_storeu_pd(y + i + 4, _mm256_add_pd(y1, p1));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(a, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
  }
  for (; i < n; ++i) {
    const double prod = alpha * x[i];
    y[i] += prod;
  }
}

namespace {

// Per-byte popcount through a nibble lookup table, summed with SAD into four
// 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

}  // namespace

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i counts = popcount_bytes(_mm256_and_si256(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

}  // namespace ptcomp::simd::avx2
