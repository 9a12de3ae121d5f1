#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "hexcut/error.hpp"

namespace hexcut {

/// 1-based vertex label. Label 0 is never a valid vertex.
using Vertex = std::int32_t;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated instead of overflowing.
constexpr std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

/// Pascal table for colex ranking of k-subsets of [1, n].
///
/// rank({a_1 < ... < a_k}) = sum_i C(a_i - 1, i). The rank is a bijection onto
/// [0, C(n, k)) and is used as a dense key for facet lookups.
class SubsetRanker {
 public:
  SubsetRanker() = default;
  SubsetRanker(int n, int k) : n_(n), k_(k), table_(static_cast<std::size_t>(n + 1) * (k + 1), 0) {
    for (int a = 0; a <= n; ++a)
      for (int i = 0; i <= k; ++i) table_[idx(a, i)] = binomial(a, i);
    total_ = binomial(n, k);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t total() const { return total_; }

  /// `t` must be strictly increasing with entries in [1, n].
  std::uint64_t rank(std::span<const Vertex> t) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) r += table_[idx(t[i] - 1, static_cast<int>(i) + 1)];
    return r;
  }

 private:
  std::size_t idx(int a, int i) const { return static_cast<std::size_t>(a) * (k_ + 1) + i; }

  int n_ = 0;
  int k_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> table_;
};

/// Advance `c` (strictly increasing, values <= hi) to the next subset in
/// lexicographic order. Returns false after the last subset.
inline bool next_combination(std::span<Vertex> c, Vertex hi) {
  const auto k = static_cast<Vertex>(c.size());
  for (Vertex i = k - 1; i >= 0; --i) {
    if (c[i] < hi - (k - 1 - i)) {
      ++c[i];
      for (Vertex j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Calls f(span) for every k-subset of `pool` (taken in pool order), in
/// lexicographic order of positions. Stops early when f returns true; the
/// return value reports whether it stopped early.
template <typename F>
bool any_k_subset(std::span<const Vertex> pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return false;
  std::vector<int> pick(k);
  std::vector<Vertex> cur(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = pool[pick[i]];
    if (f(std::span<const Vertex>(cur))) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Write (t \ {t[drop]}) ∪ {add} into `out`, sorted. `add` must not be in t.
inline void swap_one(std::span<const Vertex> t, std::size_t drop, Vertex add, std::span<Vertex> out) {
  std::size_t w = 0;
  bool placed = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == drop) continue;
    if (!placed && add < t[i]) {
      out[w++] = add;
      placed = true;
    }
    out[w++] = t[i];
  }
  if (!placed) out[w] = add;
}

}  // namespace hexcut
