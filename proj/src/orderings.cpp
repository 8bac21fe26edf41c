#include "ptcomp/orderings.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "ptcomp/error.hpp"
#include "ptcomp/random.hpp"
#include "ptcomp/traversal.hpp"

namespace ptcomp {

namespace {

// Decorrelates the annealing stream from the initial shuffle's stream.
constexpr std::uint64_t kSaStreamSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

EdgeOrdering random_order(const Graph& g, std::uint64_t seed) {
  EdgeOrdering order;
  order.edges = g.edges();
  order.kind = OrderingKind::Random;
  order.seed = seed;
  Rng rng(seed);
  shuffle(order.edges.begin(), order.edges.end(), rng);
  return order;
}

std::uint64_t EdgeScore::of(Edge e) const noexcept {
  const std::size_t i = index_of(edges, e);
  return i == edges.size() ? 0 : score[i];
}

std::uint64_t EdgeScore::total() const noexcept { return std::accumulate(score.begin(), score.end(), std::uint64_t{0}); }

EdgeScore ec_scores(const Graph& g, unsigned t) {
  if (t == 0) throw InvalidInput("t must be positive");
  EdgeScore result;
  result.edges = g.edges();
  result.score.assign(result.edges.size(), 0);
  SimplePathEnumerator enumerator(g.vertex_count());
  for (const Edge& uv : result.edges) {
    enumerator.visit(g, uv.u, uv.v, t, [&](std::span<const VertexId> p) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) ++result.score[index_of(result.edges, Edge::of(p[i], p[i + 1]))];
    });
  }
  return result;
}

EdgeOrdering ec_order(const Graph& g, unsigned t) {
  const EdgeScore scores = ec_scores(g, t);
  std::vector<std::size_t> idx(scores.edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores.score[a] > scores.score[b]; });
  EdgeOrdering order;
  order.kind = OrderingKind::Ec;
  order.edges.reserve(idx.size());
  for (std::size_t i : idx) order.edges.push_back(scores.edges[i]);
  return order;
}

void SaParams::validate() const {
  if (!(initial_temperature > 0.0)) throw InvalidInput("SA initial temperature must be positive");
  if (!(cooling > 0.0 && cooling < 1.0)) throw InvalidInput("SA cooling factor must lie in (0,1)");
}

SaOutcome sa_search(const Graph& g, const ProportionFunction& pf, const SaParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();

  EdgeOrdering current = random_order(g, params.seed);
  std::vector<Edge> best = current.edges;
  std::vector<Edge> candidate;
  Rng rng(params.seed ^ kSaStreamSalt);

  SaOutcome outcome;
  std::size_t current_cost = compressed_size(g, pf, current.edges);
  outcome.initial_cost = current_cost;
  std::size_t best_cost = current_cost;
  double temperature = params.initial_temperature;
  const std::size_t m = current.edges.size();

  for (std::size_t iter = 0; iter < params.iterations; ++iter) {
    if (m >= 2) {
      candidate = current.edges;
      const auto i = uniform_below(rng, m);
      auto j = uniform_below(rng, m - 1);
      if (j >= i) ++j;
      std::swap(candidate[i], candidate[j]);
      const std::size_t cost = compressed_size(g, pf, candidate);

      if (cost < best_cost) {
        best = candidate;
        best_cost = cost;
      }
      bool accept = cost < current_cost;
      if (!accept) {
        const double r = uniform_unit(rng);
        accept = std::exp((static_cast<double>(current_cost) - static_cast<double>(cost)) / temperature) > r;
      }
      if (accept) {
        current.edges.swap(candidate);
        current_cost = cost;
        ++outcome.accepted_moves;
      }
    }
    temperature *= params.cooling;
  }

  outcome.best_cost = best_cost;
  outcome.best_order.edges = std::move(best);
  outcome.best_order.kind = OrderingKind::Sa;
  outcome.best_order.seed = params.seed;
  outcome.result = compress_basic(g, pf, outcome.best_order);
  outcome.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

CompressionResult sa_compress(const Graph& g, const ProportionFunction& pf, const SaParams& params) {
  return sa_search(g, pf, params).result;
}

}  // namespace ptcomp
