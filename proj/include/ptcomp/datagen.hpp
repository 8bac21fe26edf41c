#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ptcomp/graph.hpp"

namespace ptcomp {

// A family of same-sized random instances.
struct FamilySpec {
  std::size_t count = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t base_seed = 0;

  // Throws InvalidInput / SizeError for count == 0 or m > n(n-1)/2.
  void validate() const;
  // Instance i is gen_gnm(n, m, base_seed + i).
  std::uint64_t seed_of(std::size_t i) const noexcept { return base_seed + i; }
};

// Uniform simple graph with exactly n vertices and m edges. Throws SizeError
// when m exceeds n(n-1)/2.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

std::vector<Graph> gen_family(const FamilySpec& spec);

// Bundled graphs: diamond, triangle, path3, star4, zachary. Throws
// InvalidInput for anything else.
Graph builtin(std::string_view name);

std::vector<std::string_view> builtin_names();

}  // namespace ptcomp
