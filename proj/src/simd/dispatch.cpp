#include <cstdlib>
#include <string_view>

#include "ptcomp/simd/kernels.hpp"

namespace ptcomp::simd {

namespace {

struct KernelTable {
  Isa isa;
  void (*axpy)(double, const double*, double*, std::size_t) noexcept;
  std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
  void (*or_into)(std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
};

KernelTable select_kernels() {
  const char* forced = std::getenv("PTCOMP_SIMD");
  const bool force_scalar = forced != nullptr && std::string_view(forced) == "scalar";
#ifdef PTCOMP_HAVE_AVX2_KERNELS
  if (!force_scalar && avx2_available())
    return {Isa::Avx2, &avx2::axpy, &avx2::and_popcount, &avx2::or_into};
#else
  (void)force_scalar;
#endif
  return {Isa::Scalar, &scalar::axpy, &scalar::and_popcount, &scalar::or_into};
}

const KernelTable& kernels() {
  static const KernelTable table = select_kernels();
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() noexcept {
#ifdef PTCOMP_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() noexcept { return kernels().isa; }

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  kernels().axpy(alpha, x.data(), y.data(), y.size());
}

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  return kernels().and_popcount(a.data(), b.data(), a.size());
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
  kernels().or_into(dst.data(), src.data(), dst.size());
}

}  // namespace ptcomp::simd
