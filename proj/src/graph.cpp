#include "ptcomp/graph.hpp"

#include <algorithm>
#include <string>

#include "ptcomp/error.hpp"
#include "ptcomp/traversal.hpp"

namespace ptcomp {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::uint64_t> labels) {
  if (!labels.empty()) {
    if (labels.size() != vertex_count) throw InvalidInput("label table size does not match vertex count");
    if (!std::is_sorted(labels.begin(), labels.end(), std::less_equal<>()))
      throw InvalidInput("labels must be strictly increasing");
  }

  std::vector<std::size_t> degree(vertex_count + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidInput("self-loop on vertex " + std::to_string(e.u));
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw InvalidInput("duplicate edge (" + std::to_string(std::min<std::size_t>(v, *dup)) + "," +
                         std::to_string(std::max<std::size_t>(v, *dup)) + ")");
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const noexcept {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edges(std::span<const Edge> edges) const {
  return from_edges(vertex_count(), edges, labels_);
}

std::optional<VertexId> Graph::find_label(std::uint64_t label) const noexcept {
  if (labels_.empty()) {
    if (label < vertex_count()) return static_cast<VertexId>(label);
    return std::nullopt;
  }
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::size_t index_of(std::span<const Edge> sorted_edges, Edge e) noexcept {
  auto it = std::lower_bound(sorted_edges.begin(), sorted_edges.end(), e);
  if (it == sorted_edges.end() || *it != e) return sorted_edges.size();
  return static_cast<std::size_t>(it - sorted_edges.begin());
}

std::vector<VertexId> k_hop_neighbors(const Graph& g, VertexId v, unsigned k) {
  std::vector<VertexId> out;
  BoundedBfs bfs(g.vertex_count());
  bfs.run(g, v, k, [&](VertexId w, std::uint32_t) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> enumerate_simple_paths(const Graph& g, VertexId u, VertexId v, unsigned max_len) {
  std::vector<Path> out;
  SimplePathEnumerator paths(g.vertex_count());
  paths.visit(g, u, v, max_len, [&](std::span<const VertexId> p) {
    out.push_back(Path{std::vector<VertexId>(p.begin(), p.end())});
  });
  // DFS over sorted rows already yields lexicographic order; a stable sort by
  // length turns it into shortest-first order.
  std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.length() < b.length(); });
  return out;
}

}  // namespace ptcomp
