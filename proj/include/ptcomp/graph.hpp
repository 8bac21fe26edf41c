#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ptcomp {

using VertexId = std::uint32_t;

// Undirected edge in canonical form (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  // Builds the canonical edge for an unordered pair.
  static constexpr Edge of(VertexId a, VertexId b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple path given by its vertex sequence; length() counts edges.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

// Immutable simple undirected graph in compressed sparse row form.
//
// Vertices are the dense ids 0..n-1. Each adjacency row is sorted and
// symmetric, with no self-loops and no duplicates. An optional label table
// remembers the ids the graph was read with (strictly increasing, so the
// dense order and the label order agree).
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput on self-loops, duplicates, out-of-range endpoints or
  // a label table of the wrong size / not strictly increasing.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::vector<std::uint64_t> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId a, VertexId b) const noexcept;

  // All edges in canonical form, sorted ascending.
  std::vector<Edge> edges() const;

  // Same vertex set and labels, different edge set.
  Graph with_edges(std::span<const Edge> edges) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::uint64_t label(VertexId v) const noexcept { return labels_.empty() ? v : labels_[v]; }
  std::span<const std::uint64_t> labels() const noexcept { return labels_; }
  std::optional<VertexId> find_label(std::uint64_t label) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint64_t> labels_;
};

// Position of e in a sorted canonical edge list, or sorted_edges.size().
std::size_t index_of(std::span<const Edge> sorted_edges, Edge e) noexcept;

// Vertices at distance 1..k from v (v excluded), sorted ascending.
std::vector<VertexId> k_hop_neighbors(const Graph& g, VertexId v, unsigned k);

// Every simple path from u to v with at most max_len edges, ordered by
// length and then lexicographically by vertex sequence.
std::vector<Path> enumerate_simple_paths(const Graph& g, VertexId u, VertexId v, unsigned max_len);

}  // namespace ptcomp
