#pragma once

// Slow, direct re-implementations used as independent references in tests.
// They share nothing with the library beyond the Graph adjacency query.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hexcut/graph.hpp"

namespace oracle {

using hexcut::Graph;
using hexcut::Vertex;
using Set = std::bitset<256>;

inline bool connected_bfs(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < s.size(); ++b)
      if (!seen[b] && g.adjacent(s[a], s[b])) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached == s.size();
}

/// All k-subsets of [1, n] in lexicographic order.
inline std::vector<std::vector<Vertex>> k_subsets(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<std::vector<Vertex>> disconnected_k_subsets(const Graph& g, int k) {
  std::vector<std::vector<Vertex>> out;
  for (auto& s : k_subsets(g.vertex_count(), k))
    if (!connected_bfs(g, s)) out.push_back(s);
  return out;
}

/// Triples inducing a path on three vertices.
inline std::int64_t induced_p3_count(const Graph& g) {
  std::int64_t c = 0;
  for (auto& s : k_subsets(g.vertex_count(), 3)) {
    const int e = g.adjacent(s[0], s[1]) + g.adjacent(s[0], s[2]) + g.adjacent(s[1], s[2]);
    c += e == 2;
  }
  return c;
}

inline Set facet_set(int n, const std::vector<Vertex>& complement) {
  Set f;
  for (Vertex v = 1; v <= n; ++v) f.set(static_cast<std::size_t>(v));
  for (Vertex v : complement) f.reset(static_cast<std::size_t>(v));
  return f;
}

/// Shelling condition straight from the definition: for all i < j there is
/// l < j with F_i ∩ F_j ⊆ F_l ∩ F_j and |F_l ∩ F_j| = |F_j| - 1.
/// Returns the least failing (i, j), 1-based, ordered by j then i.
inline std::optional<std::pair<std::size_t, std::size_t>> shelling_counterexample(int n, const std::vector<std::vector<Vertex>>& order) {
  std::vector<Set> f;
  for (const auto& c : order) f.push_back(facet_set(n, c));
  for (std::size_t j = 1; j < f.size(); ++j) {
    const auto size_j = f[j].count();
    std::vector<Set> ridges;
    for (std::size_t l = 0; l < j; ++l) {
      const auto r = f[l] & f[j];
      if (r.count() + 1 == size_j) ridges.push_back(r);
    }
    for (std::size_t i = 0; i < j; ++i) {
      const auto meet = f[i] & f[j];
      bool covered = false;
      for (const auto& r : ridges)
        if ((meet & ~r).none()) {
          covered = true;
          break;
        }
      if (!covered) return std::make_pair(i + 1, j + 1);
    }
  }
  return std::nullopt;
}

/// F_j is spanning iff every F_j minus one vertex already lies in an earlier
/// facet, i.e. the restriction face of F_j is F_j itself.
inline std::vector<char> spanning_flags(int n, const std::vector<std::vector<Vertex>>& order) {
  std::vector<Set> f;
  for (const auto& c : order) f.push_back(facet_set(n, c));
  std::vector<char> out(f.size(), 0);
  for (std::size_t j = 0; j < f.size(); ++j) {
    bool all = j > 0;
    for (Vertex v = 1; v <= n && all; ++v) {
      if (!f[j].test(static_cast<std::size_t>(v))) continue;
      auto ridge = f[j];
      ridge.reset(static_cast<std::size_t>(v));
      bool found = false;
      for (std::size_t l = 0; l < j && !found; ++l) found = (ridge & ~f[l]).none();
      all = found;
    }
    out[j] = all;
  }
  return out;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
