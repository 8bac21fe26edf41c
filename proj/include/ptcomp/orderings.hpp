#pragma once

#include <cstdint>
#include <vector>

#include "ptcomp/compressor.hpp"
#include "ptcomp/graph.hpp"
#include "ptcomp/ordering.hpp"
#include "ptcomp/proportion.hpp"

namespace ptcomp {

// Uniform permutation of g's edges from a seeded Fisher-Yates shuffle.
EdgeOrdering random_order(const Graph& g, std::uint64_t seed);

// Relaxed local edge betweenness: for every edge (u,v) of g, each simple
// u-v path of length <= t adds one to every edge it uses.
struct EdgeScore {
  std::vector<Edge> edges;           // canonical order
  std::vector<std::uint64_t> score;  // parallel to edges

  std::uint64_t of(Edge e) const noexcept;
  std::uint64_t total() const noexcept;
};

EdgeScore ec_scores(const Graph& g, unsigned t);

// Edges by descending score, ties by canonical edge.
EdgeOrdering ec_order(const Graph& g, unsigned t);

struct SaParams {
  std::size_t iterations = 1000;
  double initial_temperature = 10.0;
  double cooling = 0.99;
  std::uint64_t seed = 0;

  // Throws InvalidInput unless T0 > 0 and 0 < alpha < 1.
  void validate() const;
};

struct SaOutcome {
  CompressionResult result;  // compression under the best order found
  EdgeOrdering best_order;
  std::size_t initial_cost = 0;
  std::size_t best_cost = 0;
  std::size_t accepted_moves = 0;
};

// Simulated annealing over edge orders. Starts from random_order(g, seed),
// swaps two distinct random positions per iteration, costs each order by
// the basic compressor's |E_c|, accepts improvements and otherwise accepts
// with probability exp((C_S - cost)/T), cooling T by alpha every iteration.
SaOutcome sa_search(const Graph& g, const ProportionFunction& pf, const SaParams& params);

CompressionResult sa_compress(const Graph& g, const ProportionFunction& pf, const SaParams& params);

}  // namespace ptcomp
