#pragma once

// Data-parallel inner loops with a portable scalar reference and an AVX2
// variant chosen once at startup from CPUID. Both variants produce
// bit-identical results (the AVX2 build does not use FMA contraction), so the
// selected ISA never changes solver output.
//
// Set PTCOMP_SIMD=scalar in the environment to force the reference kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ptcomp::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

// The ISA the dispatched entry points below use.
Isa active_isa() noexcept;

// Whether the running CPU could execute the AVX2 kernels.
bool avx2_available() noexcept;

// y[i] += alpha * x[i]. Spans must have equal length.
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;

// Number of set bits in (a & b).
std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept;

// dst |= src.
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept;

// Individual variants, exposed for equivalence testing and benchmarks.
namespace scalar {
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PTCOMP_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
}  // namespace avx2
#endif

}  // namespace ptcomp::simd
