#include "ptcomp/eval.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "ptcomp/error.hpp"
#include "ptcomp/simd/kernels.hpp"
#include "ptcomp/traversal.hpp"

namespace ptcomp {

namespace {

void require_subgraph(const Graph& g, const Graph& gc) {
  if (gc.vertex_count() != g.vertex_count()) throw StructuralError("vertex sets differ");
  for (const Edge& e : gc.edges())
    if (!g.has_edge(e.u, e.v))
      throw StructuralError("edge (" + std::to_string(gc.label(e.u)) + "," + std::to_string(gc.label(e.v)) +
                            ") is not in the original graph");
}

}  // namespace

Rational compression_ratio(const Graph& g, const Graph& gc) {
  if (g.edge_count() == 0) throw InvalidInput("compression ratio undefined for a graph without edges");
  require_subgraph(g, gc);
  const auto total = static_cast<std::int64_t>(g.edge_count());
  return Rational(total - static_cast<std::int64_t>(gc.edge_count()), total);
}

std::uint64_t SpHistogram::total_pairs() const noexcept {
  std::uint64_t sum = disconnected;
  for (const auto& [len, count] : counts) sum += count;
  return sum;
}

SpHistogram sp_histogram(const Graph& g) {
  SpHistogram h;
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  const std::size_t n = g.vertex_count();
  for (VertexId s = 0; s < n; ++s) {
    bfs_distances(g, s, dist, queue);
    for (VertexId v = s + 1; v < n; ++v) {
      if (dist[v] == BoundedBfs::kUnreached) ++h.disconnected;
      else ++h.counts[dist[v]];
    }
  }
  return h;
}

StretchReport stretch_check(const Graph& g, const Graph& gc, unsigned t) {
  require_subgraph(g, gc);
  StretchReport report;
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  std::uint32_t worst = 1;
  for (const Edge& e : g.edges()) {
    if (gc.has_edge(e.u, e.v)) continue;
    bfs_distances(gc, e.u, dist, queue);
    if (dist[e.v] == BoundedBfs::kUnreached) {
      report.ok = false;
      report.max_stretch.reset();
      return report;
    }
    worst = std::max(worst, dist[e.v]);
  }
  report.max_stretch = worst;
  report.ok = worst <= t;
  return report;
}

std::optional<Rational> all_pairs_max_stretch(const Graph& g, const Graph& gc) {
  require_subgraph(g, gc);
  Rational worst(1);
  std::vector<std::uint32_t> dg, dc;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    bfs_distances(g, s, dg, queue);
    bfs_distances(gc, s, dc, queue);
    for (VertexId v = s + 1; v < g.vertex_count(); ++v) {
      if (dg[v] == BoundedBfs::kUnreached) continue;
      if (dc[v] == BoundedBfs::kUnreached) return std::nullopt;
      worst = std::max(worst, Rational(dc[v], dg[v]));
    }
  }
  return worst;
}

double time_all_pairs_bfs(const Graph& g, unsigned repeats) {
  double best = 0.0;
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  volatile std::uint64_t sink = 0;
  for (unsigned r = 0; r < std::max(1u, repeats); ++r) {
    const auto start = std::chrono::steady_clock::now();
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      bfs_distances(g, s, dist, queue);
      sink = sink + queue.size();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r == 0 || secs < best) best = secs;
  }
  return best;
}

BitsetVerifier::BitsetVerifier(const Graph& g, const ProportionFunction& pf)
    : g_(g), pf_(pf), n_(g.vertex_count()), words_((g.vertex_count() + 63) / 64) {
  base_.assign(n_ * words_, 0);
  adj_.assign(n_ * words_, 0);
  reach_.assign(words_, 0);
  frontier_.assign(words_, 0);
  next_.assign(words_, 0);
  for (VertexId v = 0; v < n_; ++v)
    for (VertexId w : g.neighbors(v)) row(base_, v)[w / 64] |= std::uint64_t{1} << (w % 64);
}

bool BitsetVerifier::accepts(const std::vector<Edge>& kept) {
  std::fill(adj_.begin(), adj_.end(), 0);
  for (const Edge& e : kept) {
    row(adj_, e.u)[e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    row(adj_, e.v)[e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  const unsigned t = pf_.t();
  for (VertexId v = 0; v < n_; ++v) {
    const std::size_t deg = g_.degree(v);
    if (deg == 0) continue;
    const std::span<const std::uint64_t> base(row(base_, v), words_);
    std::fill(reach_.begin(), reach_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    reach_[v / 64] |= std::uint64_t{1} << (v % 64);
    frontier_[v / 64] |= std::uint64_t{1} << (v % 64);
    for (unsigned level = 1; level <= t; ++level) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = frontier_[w]; bits != 0; bits &= bits - 1) {
          const auto x = static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          simd::or_into(next_, std::span<const std::uint64_t>(row(adj_, x), words_));
        }
      }
      for (std::size_t w = 0; w < words_; ++w) {
        frontier_[w] = next_[w] & ~reach_[w];
        reach_[w] |= next_[w];
      }
      const std::uint64_t hits = simd::and_popcount(reach_, base);
      if (!meets_threshold(hits, pf_.at(level), deg)) return false;
    }
  }
  return true;
}

OptimalCompression brute_force_optimal(const Graph& g, const ProportionFunction& pf, std::size_t max_edges) {
  const std::size_t m = g.edge_count();
  if (m > max_edges || m > 30)
    throw SizeError("exhaustive search limited to " + std::to_string(std::min<std::size_t>(max_edges, 30)) +
                    " edges (graph has " + std::to_string(m) + ")");
  const auto edges = g.edges();
  BitsetVerifier verifier(g, pf);
  OptimalCompression out;
  std::vector<Edge> kept;
  for (std::size_t k = 0; k <= m; ++k) {
    // Gosper's hack walks every k-subset of the m edges.
    const std::uint64_t limit = std::uint64_t{1} << m;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
      kept.clear();
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
        kept.push_back(edges[static_cast<std::size_t>(std::countr_zero(bits))]);
      ++out.subsets_checked;
      if (verifier.accepts(kept)) {
        out.optimum = k;
        out.witness = kept;
        return out;
      }
      if (mask == 0) break;
      const std::uint64_t c = mask & (0 - mask);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  // The full edge set always qualifies, so the loop returns before here.
  out.optimum = m;
  out.witness = edges;
  return out;
}

}  // namespace ptcomp
