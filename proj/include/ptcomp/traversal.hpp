#pragma once

// Reusable traversal machinery shared by the compressor, the verifier, the
// path-based orderings and the evaluation code. Everything here is templated
// on an adjacency type exposing vertex_count() and neighbors(v) returning an
// iterable range of VertexId, so it works on both the immutable Graph and the
// growing adjacency lists used during compression.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ptcomp/graph.hpp"

namespace ptcomp {

template <class A>
concept Adjacency = requires(const A& a, VertexId v) {
  { a.vertex_count() } -> std::convertible_to<std::size_t>;
  a.neighbors(v);
};

// Growable adjacency lists. Rows are kept in insertion order.
class AdjacencyLists {
 public:
  explicit AdjacencyLists(std::size_t n) : rows_(n) {}

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::span<const VertexId> neighbors(VertexId v) const noexcept { return rows_[v]; }
  void add_edge(Edge e) {
    rows_[e.u].push_back(e.v);
    rows_[e.v].push_back(e.u);
  }

 private:
  std::vector<std::vector<VertexId>> rows_;
};

// Depth-bounded breadth-first search with epoch-stamped scratch, so repeated
// searches on the same vertex set cost O(visited) rather than O(n).
class BoundedBfs {
 public:
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  explicit BoundedBfs(std::size_t n) : stamp_(n, 0), depth_(n, 0) { queue_.reserve(n); }

  // Visits every vertex at distance 1..max_depth from source, level by
  // level. visit(vertex, depth) is called once per vertex; on_level(depth)
  // once after each completed level and may return false to stop early.
  template <Adjacency A, class Visit, class OnLevel>
  void run(const A& adj, VertexId source, std::uint32_t max_depth, Visit&& visit, OnLevel&& on_level) {
    next_epoch();
    stamp_[source] = epoch_;
    depth_[source] = 0;
    queue_.clear();
    queue_.push_back(source);
    std::size_t head = 0;
    for (std::uint32_t level = 1; level <= max_depth; ++level) {
      const std::size_t level_end = queue_.size();
      if (head == level_end) {
        // Frontier exhausted: remaining levels add nothing new.
        for (; level <= max_depth; ++level)
          if (!on_level(level)) return;
        return;
      }
      for (; head < level_end; ++head) {
        for (VertexId w : adj.neighbors(queue_[head])) {
          if (stamp_[w] == epoch_) continue;
          stamp_[w] = epoch_;
          depth_[w] = level;
          queue_.push_back(w);
          visit(w, level);
        }
      }
      if (!on_level(level)) return;
    }
  }

  template <Adjacency A, class Visit>
  void run(const A& adj, VertexId source, std::uint32_t max_depth, Visit&& visit) {
    run(adj, source, max_depth, std::forward<Visit>(visit), [](std::uint32_t) { return true; });
  }

  // Distance from the last source, or kUnreached.
  std::uint32_t distance(VertexId v) const noexcept { return stamp_[v] == epoch_ ? depth_[v] : kUnreached; }

 private:
  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> depth_;
  std::vector<VertexId> queue_;
  std::uint32_t epoch_ = 0;
};

// Single-source unbounded BFS distances; kUnreached for other components.
template <Adjacency A>
void bfs_distances(const A& adj, VertexId source, std::vector<std::uint32_t>& dist, std::vector<VertexId>& queue) {
  dist.assign(adj.vertex_count(), BoundedBfs::kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId w : adj.neighbors(x)) {
      if (dist[w] != BoundedBfs::kUnreached) continue;
      dist[w] = dist[x] + 1;
      queue.push_back(w);
    }
  }
}

// Iterative DFS over simple paths between two fixed endpoints. Paths are
// produced in lexicographic order of their vertex sequences when the
// adjacency rows are sorted. Cost grows as b^max_len for branching factor b.
class SimplePathEnumerator {
 public:
  explicit SimplePathEnumerator(std::size_t n) : on_path_(n, 0) {}

  // Calls fn(std::span<const VertexId>) for every simple path source..target
  // with 1..max_len edges.
  template <Adjacency A, class Fn>
  void visit(const A& adj, VertexId source, VertexId target, unsigned max_len, Fn&& fn) {
    if (source == target || max_len == 0) return;
    path_.clear();
    stack_.clear();
    path_.push_back(source);
    stack_.push_back({source, 0});
    on_path_[source] = 1;
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      auto row = adj.neighbors(top.vertex);
      const std::size_t edges_so_far = path_.size() - 1;
      if (top.next >= std::size(row)) {
        on_path_[top.vertex] = 0;
        path_.pop_back();
        stack_.pop_back();
        continue;
      }
      const VertexId w = row[top.next++];
      if (on_path_[w]) continue;
      if (w == target) {
        path_.push_back(w);
        fn(std::span<const VertexId>(path_));
        path_.pop_back();
        continue;
      }
      // Only the target may close a path of the maximum length.
      if (edges_so_far + 1 >= max_len) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      stack_.push_back({w, 0});
    }
  }

 private:
  struct Frame {
    VertexId vertex;
    std::size_t next;
  };
  std::vector<std::uint8_t> on_path_;
  std::vector<VertexId> path_;
  std::vector<Frame> stack_;
};

}  // namespace ptcomp
