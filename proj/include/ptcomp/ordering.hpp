#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ptcomp/graph.hpp"

namespace ptcomp {

enum class OrderingKind { Random, Lp, Ec, Sa, Custom };

std::string_view to_string(OrderingKind kind) noexcept;

// A permutation of a graph's edge set, in the order the basic compressor
// scans it, plus where it came from.
struct EdgeOrdering {
  std::vector<Edge> edges;
  OrderingKind kind = OrderingKind::Custom;
  std::optional<std::uint64_t> seed;
};

}  // namespace ptcomp
