#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ptcomp/graph.hpp"
#include "ptcomp/proportion.hpp"
#include "ptcomp/rational.hpp"

namespace ptcomp {

// Deleted-edge fraction (|E| - |E_c|) / |E|. Throws InvalidInput for an
// edgeless g and StructuralError if gc is not a subgraph of g.
Rational compression_ratio(const Graph& g, const Graph& gc);

// Unordered vertex pairs grouped by hop distance.
struct SpHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;  // distance -> pairs
  std::uint64_t disconnected = 0;

  std::uint64_t total_pairs() const noexcept;
  friend bool operator==(const SpHistogram&, const SpHistogram&) = default;
};

SpHistogram sp_histogram(const Graph& g);

struct StretchReport {
  bool ok = true;
  // Largest dist_gc(u,v) over removed edges (u,v); nullopt if some removed
  // edge's endpoints are disconnected in gc. 1 when nothing was removed.
  std::optional<std::uint32_t> max_stretch = 1;
};

StretchReport stretch_check(const Graph& g, const Graph& gc, unsigned t);

// max over pairs connected in g of dist_gc / dist_g, as an exact fraction;
// nullopt if some pair connected in g is disconnected in gc.
std::optional<Rational> all_pairs_max_stretch(const Graph& g, const Graph& gc);

// Seconds spent computing all-pairs BFS distances (best of repeats).
double time_all_pairs_bfs(const Graph& g, unsigned repeats = 1);

struct OptimalCompression {
  std::size_t optimum = 0;
  std::vector<Edge> witness;  // canonical, sorted
  std::uint64_t subsets_checked = 0;
};

// Smallest valid compression by exhaustive subset search in increasing
// cardinality. Throws SizeError if |E| > max_edges (at most 30).
OptimalCompression brute_force_optimal(const Graph& g, const ProportionFunction& pf, std::size_t max_edges = 20);

// Bit-parallel checker for small graphs: vertex sets are bitsets, each BFS
// level is an OR over frontier rows and each intersection an AND-popcount.
// Used by the exhaustive search, where the same g is checked against many
// candidate edge subsets.
class BitsetVerifier {
 public:
  BitsetVerifier(const Graph& g, const ProportionFunction& pf);

  // Whether the subgraph made of the listed edges satisfies pf.
  bool accepts(const std::vector<Edge>& kept);

 private:
  std::uint64_t* row(std::vector<std::uint64_t>& rows, VertexId v) { return rows.data() + v * words_; }

  const Graph& g_;
  ProportionFunction pf_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> base_;  // original neighborhoods
  std::vector<std::uint64_t> adj_;   // candidate adjacency
  std::vector<std::uint64_t> reach_, frontier_, next_;
};

}  // namespace ptcomp
