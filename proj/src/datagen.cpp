#include "ptcomp/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "ptcomp/edge_list.hpp"
#include "ptcomp/error.hpp"
#include "ptcomp/random.hpp"

namespace ptcomp {

extern const char* const kZacharyEdgeList;  // generated from data/zachary.txt

namespace {

// Below this many vertex pairs the pair index space is materialised and
// partially shuffled; above it edges are drawn by rejection.
constexpr std::uint64_t kDensePairLimit = std::uint64_t{1} << 22;

// Inverse of the row-major enumeration of pairs (u < v): row u starts at
// index u(2n-u-1)/2.
Edge pair_from_index(std::uint64_t idx, std::uint64_t n) {
  auto start_of = [n](std::uint64_t r) { return r * (2 * n - r - 1) / 2; };
  const double nd = static_cast<double>(n);
  const double disc = (2 * nd - 1) * (2 * nd - 1) - 8.0 * static_cast<double>(idx);
  auto u = static_cast<std::uint64_t>(std::max(0.0, std::floor(((2 * nd - 1) - std::sqrt(std::max(0.0, disc))) / 2)));
  // Correct floating-point drift.
  while (u > 0 && start_of(u) > idx) --u;
  while (start_of(u + 1) <= idx) ++u;
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(u + 1 + (idx - start_of(u)))};
}

}  // namespace

void FamilySpec::validate() const {
  if (count == 0) throw InvalidInput("family must contain at least one graph");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs)
    throw SizeError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs)
    throw SizeError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (pairs <= kDensePairLimit) {
    std::vector<std::uint64_t> idx(pairs);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::uint64_t i = 0; i < m; ++i) {
      const auto j = i + uniform_below(rng, pairs - i);
      std::swap(idx[i], idx[j]);
      edges.push_back(pair_from_index(idx[i], n));
    }
  } else {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    while (edges.size() < m) {
      const auto k = uniform_below(rng, pairs);
      if (chosen.insert(k).second) edges.push_back(pair_from_index(k, n));
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

std::vector<Graph> gen_family(const FamilySpec& spec) {
  spec.validate();
  std::vector<Graph> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(gen_gnm(spec.n, spec.m, spec.seed_of(i)));
  return out;
}

Graph builtin(std::string_view name) {
  auto make = [](std::size_t n, std::initializer_list<Edge> edges) {
    return Graph::from_edges(n, std::vector<Edge>(edges));
  };
  if (name == "triangle") return make(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "path3") return make(3, {{0, 1}, {1, 2}});
  if (name == "star4") return make(4, {{0, 1}, {0, 2}, {0, 3}});
  // K4 minus the edge between vertices 0 and 3.
  if (name == "diamond") return make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "zachary") return parse_edge_list(kZacharyEdgeList).graph;
  throw InvalidInput("unknown builtin graph '" + std::string(name) + "'");
}

std::vector<std::string_view> builtin_names() { return {"diamond", "triangle", "path3", "star4", "zachary"}; }

}  // namespace ptcomp
