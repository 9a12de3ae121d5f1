#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexcut/combinatorics.hpp"
#include "hexcut/error.hpp"

namespace hexcut {

/// Undirected edge with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertex set [1, n]. Immutable once built.
///
/// Neighbour lists are kept sorted; a packed bit matrix gives a constant-time
/// edge test.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) + 1), bits_(words_for(std::max(n, 0)) * (std::max(n, 0) + 1), 0) {
    if (n < 1) throw Error(ErrorKind::InvalidParams, "graph needs at least one vertex");
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 1 || e.v > n) throw Error(ErrorKind::VertexOutOfRange, "edge endpoint outside [1, n]");
      if (e.u == e.v) throw Error(ErrorKind::InvalidParams, "self-loop");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[row(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }

  /// Whether the induced subgraph on `s` is connected. `s` must be nonempty
  /// with distinct entries in [1, n].
  bool is_connected_subset(std::span<const Vertex> s) const {
    if (s.empty()) throw Error(ErrorKind::EmptySubset, "connectivity of the empty set");
    for (Vertex v : s) check_vertex(v);
    return connected_unchecked(s);
  }

  /// Same as is_connected_subset without range checks; hot path for facet
  /// enumeration.
  bool connected_unchecked(std::span<const Vertex> s) const {
    const std::size_t k = s.size();
    if (k <= 1) return true;
    if (k == 2) return adjacent(s[0], s[1]);
    if (k == 3) {
      const int e = int(adjacent(s[0], s[1])) + int(adjacent(s[0], s[2])) + int(adjacent(s[1], s[2]));
      return e >= 2;
    }
    if (k == 4) {
      std::array<int, 4> parent{0, 1, 2, 3};
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      int comps = 4;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (adjacent(s[i], s[j])) {
            const int a = find(i), b = find(j);
            if (a != b) {
              parent[a] = b;
              --comps;
            }
          }
      return comps == 1;
    }
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < k; ++y)
        if (!seen[y] && adjacent(s[x], s[y])) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == k;
  }

  /// Copy of this graph with one edge deleted (used by mutation tests).
  Graph without_edge(Edge e) const {
    if (e.u > e.v) std::swap(e.u, e.v);
    std::vector<Edge> rest;
    for (const auto& x : edges_)
      if (!(x == e)) rest.push_back(x);
    return Graph(n_, std::move(rest));
  }

  /// Length of a shortest cycle, or 0 for a forest.
  int girth() const {
    int best = 0;
    std::vector<int> dist(n_ + 1), parent(n_ + 1);
    std::vector<Vertex> queue;
    for (Vertex s = 1; s <= n_; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.assign(1, s);
      dist[s] = 0;
      parent[s] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const Vertex x = queue[h];
        for (Vertex y : adj_[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            queue.push_back(y);
          } else if (parent[x] != y) {
            const int len = dist[x] + dist[y] + 1;
            if (best == 0 || len < best) best = len;
          }
        }
      }
    }
    return best;
  }

  bool connected() const {
    std::vector<char> seen(n_ + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj_[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == n_;
  }

 private:
  static std::size_t words_for(int n) { return static_cast<std::size_t>(n) / 64 + 1; }
  std::size_t row(Vertex u) const { return static_cast<std::size_t>(u) * words_for(n_); }
  void set_bit(Vertex u, Vertex v) { bits_[row(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63); }
  void check_vertex(Vertex v) const {
    if (!contains(v)) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::vector<Edge> edges_;
};

/// Cycle graph C_n with the labelling 1 - 2 - ... - n - 1.
inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return Graph(n, std::move(e));
}

}  // namespace hexcut
