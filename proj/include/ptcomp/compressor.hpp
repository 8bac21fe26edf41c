#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptcomp/graph.hpp"
#include "ptcomp/ordering.hpp"
#include "ptcomp/proportion.hpp"
#include "ptcomp/traversal.hpp"

namespace ptcomp {

struct CompressionResult {
  std::vector<Edge> kept;  // canonical, sorted ascending
  std::size_t source_vertices = 0;
  std::size_t source_edges = 0;
  ProportionFunction pf{{Rational(1)}};
  OrderingKind ordering = OrderingKind::Custom;
  std::optional<std::uint64_t> seed;
  double seconds = 0.0;

  std::size_t kept_count() const noexcept { return kept.size(); }
};

struct Violation {
  VertexId vertex = 0;
  unsigned level = 0;
  Rational required;           // p(level) * |N_G(v)|
  std::uint64_t achieved = 0;  // |N_G(v) ∩ N^level_Gc(v)|

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Evaluates the neighborhood constraint of a single vertex: for every level
// i in 1..t, at least p(i)*|base| of the base neighbors must lie within i
// hops of v in gc. Owns reusable scratch sized for n vertices.
class NeighborhoodChecker {
 public:
  explicit NeighborhoodChecker(std::size_t n) : bfs_(n), mark_(n, 0) {}

  template <Adjacency A>
  bool satisfied(VertexId v, std::span<const VertexId> base, const A& gc, const ProportionFunction& pf) {
    const std::size_t deg = base.size();
    if (deg == 0) return true;
    mark(base);
    std::uint64_t hits = 0;
    bool ok = true;
    bfs_.run(
        gc, v, pf.t(),
        [&](VertexId w, std::uint32_t) {
          if (mark_[w] == epoch_) ++hits;
        },
        [&](std::uint32_t level) {
          if (!meets_threshold(hits, pf.at(level), deg)) {
            ok = false;
            return false;
          }
          // Every base neighbor already reached: later levels cannot fail.
          return hits < deg;
        });
    return ok;
  }

  // Achieved intersection size at each level 1..t (counts[i-1]).
  template <Adjacency A>
  void level_counts(VertexId v, std::span<const VertexId> base, const A& gc, unsigned t,
                    std::vector<std::uint64_t>& counts) {
    counts.assign(t, 0);
    if (base.empty()) return;
    mark(base);
    std::uint64_t hits = 0;
    bfs_.run(
        gc, v, t,
        [&](VertexId w, std::uint32_t) {
          if (mark_[w] == epoch_) ++hits;
        },
        [&](std::uint32_t level) {
          counts[level - 1] = hits;
          return true;
        });
  }

 private:
  void mark(std::span<const VertexId> base) {
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    for (VertexId w : base) mark_[w] = epoch_;
  }

  BoundedBfs bfs_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

// True iff v meets every level of pf in gc relative to base_neighbors.
bool check_node(VertexId v, std::span<const VertexId> base_neighbors, const Graph& gc, const ProportionFunction& pf);

// Incremental scan: replays order into a growing reference graph and keeps
// an edge whenever one of its endpoints would otherwise miss a level of pf.
// Throws InvalidOrdering if order is not a permutation of g's edges.
CompressionResult compress_basic(const Graph& g, const ProportionFunction& pf, const EdgeOrdering& order);

// Same scan, returning only |E_c|. Used by the search-based orderings.
std::size_t compressed_size(const Graph& g, const ProportionFunction& pf, std::span<const Edge> order);

// The kept edges as a graph on the source's vertex set.
Graph compressed_graph(const Graph& g, const CompressionResult& result);

// Checks gc against every vertex's full original neighborhood. Throws
// StructuralError if gc is not a subgraph of g on the same vertex set.
VerificationReport verify(const Graph& g, const Graph& gc, const ProportionFunction& pf);

}  // namespace ptcomp
