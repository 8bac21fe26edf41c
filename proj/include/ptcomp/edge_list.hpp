#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "ptcomp/graph.hpp"

namespace ptcomp {

// Plain-text edge lists in the SNAP style: '#' comment lines, one "u v" pair
// of unsigned integers per data line, undirected.

struct EdgeListLoad {
  Graph graph;
  std::size_t duplicate_edges = 0;  // repeated pairs (either direction) that were collapsed
};

using LabelPair = std::pair<std::uint64_t, std::uint64_t>;

// Raw label pairs in file order. Throws ParseError with the line number.
std::vector<LabelPair> read_label_pairs(std::istream& in);

// Loads a graph and relabels vertices densely in ascending label order.
// Throws ParseError for malformed lines and InvalidInput for self-loops.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad parse_edge_list(std::string_view text);

// Interprets label pairs as a subgraph of host (same vertex set). Throws
// StructuralError naming the first pair that is not an edge of host.
Graph subgraph_from_labels(const Graph& host, const std::vector<LabelPair>& pairs);

// Writes canonical "u v" lines (u < v), sorted ascending, using labels.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ptcomp
