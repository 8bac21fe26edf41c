#include <bit>

#include "ptcomp/simd/kernels.hpp"

namespace ptcomp::simd::scalar {

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double prod = alpha * x[i];
    y[i] += prod;
  }
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

}  // namespace ptcomp::simd::scalar
