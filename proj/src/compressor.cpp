#include "ptcomp/compressor.hpp"

#include <algorithm>
#include <chrono>

#include "ptcomp/error.hpp"

namespace ptcomp {

namespace {

void require_permutation(const Graph& g, std::span<const Edge> order) {
  if (order.size() != g.edge_count())
    throw InvalidOrdering("ordering has " + std::to_string(order.size()) + " edges, graph has " +
                          std::to_string(g.edge_count()));
  std::vector<Edge> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges()) throw InvalidOrdering("ordering is not a permutation of the graph's edges");
}

// The scan itself; order is assumed valid.
template <class OnKeep>
void scan(const Graph& g, const ProportionFunction& pf, std::span<const Edge> order, OnKeep&& on_keep) {
  const std::size_t n = g.vertex_count();
  AdjacencyLists reference(n);
  AdjacencyLists kept(n);
  NeighborhoodChecker checker(n);
  for (const Edge& e : order) {
    reference.add_edge(e);
    const bool insert = !checker.satisfied(e.u, reference.neighbors(e.u), kept, pf) ||
                        !checker.satisfied(e.v, reference.neighbors(e.v), kept, pf);
    if (insert) {
      kept.add_edge(e);
      on_keep(e);
    }
  }
}

}  // namespace

std::string_view to_string(OrderingKind kind) noexcept {
  switch (kind) {
    case OrderingKind::Random: return "random";
    case OrderingKind::Lp: return "lp";
    case OrderingKind::Ec: return "ec";
    case OrderingKind::Sa: return "sa";
    case OrderingKind::Custom: return "custom";
  }
  return "custom";
}

bool check_node(VertexId v, std::span<const VertexId> base_neighbors, const Graph& gc, const ProportionFunction& pf) {
  NeighborhoodChecker checker(gc.vertex_count());
  return checker.satisfied(v, base_neighbors, gc, pf);
}

CompressionResult compress_basic(const Graph& g, const ProportionFunction& pf, const EdgeOrdering& order) {
  const auto start = std::chrono::steady_clock::now();
  require_permutation(g, order.edges);

  CompressionResult result;
  scan(g, pf, order.edges, [&](const Edge& e) { result.kept.push_back(e); });
  std::sort(result.kept.begin(), result.kept.end());
  result.source_vertices = g.vertex_count();
  result.source_edges = g.edge_count();
  result.pf = pf;
  result.ordering = order.kind;
  result.seed = order.seed;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::size_t compressed_size(const Graph& g, const ProportionFunction& pf, std::span<const Edge> order) {
  std::size_t count = 0;
  scan(g, pf, order, [&](const Edge&) { ++count; });
  return count;
}

Graph compressed_graph(const Graph& g, const CompressionResult& result) { return g.with_edges(result.kept); }

VerificationReport verify(const Graph& g, const Graph& gc, const ProportionFunction& pf) {
  if (gc.vertex_count() != g.vertex_count())
    throw StructuralError("compressed graph has " + std::to_string(gc.vertex_count()) + " vertices, original has " +
                          std::to_string(g.vertex_count()));
  for (const Edge& e : gc.edges())
    if (!g.has_edge(e.u, e.v))
      throw StructuralError("edge (" + std::to_string(gc.label(e.u)) + "," + std::to_string(gc.label(e.v)) +
                            ") is not in the original graph");

  VerificationReport report;
  NeighborhoodChecker checker(g.vertex_count());
  std::vector<std::uint64_t> counts;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto base = g.neighbors(v);
    checker.level_counts(v, base, gc, pf.t(), counts);
    for (unsigned level = 1; level <= pf.t(); ++level) {
      if (meets_threshold(counts[level - 1], pf.at(level), base.size())) continue;
      report.violations.push_back(
          {v, level, pf.at(level) * Rational(static_cast<std::int64_t>(base.size())), counts[level - 1]});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace ptcomp
