#pragma once

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hexcut/combinatorics.hpp"
#include "hexcut/hexgraph.hpp"
#include "hexcut/parallel.hpp"

namespace hexcut {

using BigInt = boost::multiprecision::cpp_int;

/// Sorted k-tuples stored back to back. Row i is the complement of one facet.
class TupleList {
 public:
  TupleList() = default;
  explicit TupleList(int k) : k_(k) {}

  int k() const { return k_; }
  std::size_t size() const { return k_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(k_); }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> operator[](std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  void push_back(std::span<const Vertex> t) { flat_.insert(flat_.end(), t.begin(), t.end()); }
  void append(const TupleList& other) { flat_.insert(flat_.end(), other.flat_.begin(), other.flat_.end()); }
  void reserve(std::size_t rows) { flat_.reserve(rows * static_cast<std::size_t>(k_)); }

  std::vector<Vertex> row(std::size_t i) const {
    auto s = (*this)[i];
    return {s.begin(), s.end()};
  }

 private:
  int k_ = 0;
  std::vector<Vertex> flat_;
};

/// Dense map from a k-subset (via its colex rank) to an ordinal, -1 if absent.
class TupleIndex {
 public:
  TupleIndex() = default;
  TupleIndex(int n, int k) : ranker_(n, k), slots_(ranker_.total(), -1) {}

  std::int64_t find(std::span<const Vertex> t) const { return slots_[ranker_.rank(t)]; }
  void set(std::span<const Vertex> t, std::int64_t pos) { slots_[ranker_.rank(t)] = pos; }

 private:
  SubsetRanker ranker_;
  std::vector<std::int64_t> slots_;
};

/// The k-cut complex of a graph, stored only through its facet complements.
///
/// Facets are the complements of k-subsets inducing a disconnected subgraph.
/// `complements()` lists them in ascending lexicographic order, and the index
/// maps each complement back to its ordinal in that list.
class CutComplex {
 public:
  CutComplex(Graph graph, std::optional<HexParams> hex, int k, TupleList complements)
      : graph_(std::move(graph)), hex_(hex), k_(k), complements_(std::move(complements)),
        index_(graph_.vertex_count(), k) {
    for (std::size_t i = 0; i < complements_.size(); ++i) index_.set(complements_[i], static_cast<std::int64_t>(i));
  }

  const Graph& graph() const { return graph_; }
  const std::optional<HexParams>& hex_params() const { return hex_; }
  int k() const { return k_; }
  int vertex_count() const { return graph_.vertex_count(); }
  /// Dimension of every facet, N - k - 1.
  int dimension() const { return vertex_count() - k_ - 1; }

  std::size_t facet_count() const { return complements_.size(); }
  const TupleList& complements() const { return complements_; }

  /// Lexicographic ordinal of the facet with this complement, -1 if the
  /// k-subset is connected (not a facet complement).
  std::int64_t find(std::span<const Vertex> complement) const { return index_.find(complement); }
  bool is_facet_complement(std::span<const Vertex> complement) const { return find(complement) >= 0; }

 private:
  Graph graph_;
  std::optional<HexParams> hex_;
  int k_;
  TupleList complements_;
  TupleIndex index_;
};

struct EnumerateOptions {
  int jobs = 1;
  /// Refuse to scan more than this many k-subsets.
  std::uint64_t max_subsets = 50'000'000;
};

/// Tests every k-subset for induced disconnectedness. The subset space is
/// split by smallest element; each chunk is produced in lexicographic order
/// and the chunks are concatenated in order, so the result does not depend on
/// the worker count.
inline CutComplex enumerate_facets(const Graph& g, int k, std::optional<HexParams> hex = std::nullopt,
                                   const EnumerateOptions& opt = {}) {
  const int n = g.vertex_count();
  if (k < 1 || k > n - 1)
    throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
  if (binomial(n, k) > opt.max_subsets)
    throw Error(ErrorKind::ResourceGuard, "C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed the enumeration guard");

  const std::size_t chunks = static_cast<std::size_t>(n - k + 1);
  std::vector<TupleList> parts(chunks, TupleList(k));
  parallel_tasks(chunks, opt.jobs, [&](std::size_t c, int) {
    const Vertex first = static_cast<Vertex>(c) + 1;
    std::vector<Vertex> cur(k);
    cur[0] = first;
    if (k == 1) {
      // A single vertex always induces a connected subgraph.
      return;
    }
    for (int i = 1; i < k; ++i) cur[i] = first + i;
    std::span<Vertex> tail(cur.data() + 1, static_cast<std::size_t>(k - 1));
    do {
      if (!g.connected_unchecked(cur)) parts[c].push_back(cur);
    } while (next_combination(tail, n));
  });

  TupleList all(k);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (const auto& p : parts) all.append(p);
  return CutComplex(g, hex, k, std::move(all));
}

inline CutComplex enumerate_facets(const HexGraph& g, int k, const EnumerateOptions& opt = {}) {
  return enumerate_facets(g.graph(), k, g.params(), opt);
}

/// Number of induced P3 in H_{1 x m x n}: 6mn + 2m + 2n - 4.
inline std::int64_t delta_formula(int m, int n) {
  HexParams{m, n}.validate();
  return 6LL * m * n + 2LL * m + 2LL * n - 4;
}

/// Number of facets of the 3-cut complex: C(N, 3) - delta.
inline std::int64_t eta_formula(int m, int n) {
  HexParams p{m, n};
  p.validate();
  return static_cast<std::int64_t>(binomial(p.vertex_count(), 3)) - delta_formula(m, n);
}

namespace detail {

/// Whether some k-subset of `pool` induces a disconnected subgraph.
inline bool has_disconnected_k_subset(const Graph& g, std::span<const Vertex> pool, int k) {
  return any_k_subset(pool, k, [&](std::span<const Vertex> t) { return !g.connected_unchecked(t); });
}

}  // namespace detail

/// sigma is a face iff V \ sigma contains a k-subset inducing a disconnected
/// subgraph. Runs a search over the complement, no facet scan.
inline bool is_face(const CutComplex& cx, std::span<const Vertex> sigma) {
  const int n = cx.vertex_count();
  std::vector<char> in(n + 1, 0);
  for (Vertex v : sigma) {
    if (v < 1 || v > n) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    in[v] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= n; ++v)
    if (!in[v]) rest.push_back(v);
  if (static_cast<int>(rest.size()) < cx.k()) return false;
  return detail::has_disconnected_k_subset(cx.graph(), rest, cx.k());
}

/// Face counts per dimension. counts[0] is f_{-1} (the empty face), counts[i]
/// is f_{i-1}, up to f_d with d = N - k - 1.
struct FVector {
  std::vector<BigInt> counts;

  const BigInt& f(int dim) const { return counts.at(static_cast<std::size_t>(dim + 1)); }
  int top_dimension() const { return static_cast<int>(counts.size()) - 2; }

  /// sum_i (-1)^i f_i over i = -1..d.
  BigInt reduced_euler() const {
    BigInt s = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      // counts[j] is f_{j-1}; dimension j - 1 has sign (-1)^(j-1).
      if (j % 2 == 0) s -= counts[j];
      else s += counts[j];
    }
    return s;
  }

  friend bool operator==(const FVector&, const FVector&) = default;
};

inline constexpr int kDefaultExhaustiveLimit = 20;

/// Counts faces by running is_face over all 2^N vertex subsets.
inline FVector f_vector_exhaustive(const CutComplex& cx, int max_vertices = kDefaultExhaustiveLimit) {
  const int n = cx.vertex_count();
  if (n > max_vertices || n > 30)
    throw Error(ErrorKind::SizeLimitExceeded, "exhaustive f-vector needs N <= " + std::to_string(max_vertices) + ", N=" + std::to_string(n));
  const int d = cx.dimension();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 2, 0);
  std::vector<Vertex> rest;
  rest.reserve(n);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    if (size > d + 1) continue;
    rest.clear();
    for (int v = 1; v <= n; ++v)
      if (!((mask >> (v - 1)) & 1U)) rest.push_back(v);
    if (detail::has_disconnected_k_subset(cx.graph(), rest, cx.k())) ++counts[static_cast<std::size_t>(size)];
  }
  FVector f;
  for (auto c : counts) f.counts.emplace_back(c);
  return f;
}

/// Closed form for the 3-cut complex of H_{1 x m x n}.
///
/// Girth 6 means no induced C4, so every 4-subset contains a disconnected
/// triple and every subset of size <= N-4 is a face: f_{j-1} = C(N, j) for
/// j <= N-4. The facets (size N-3) number eta.
inline FVector f_vector_closed_form(const HexParams& p) {
  p.validate();
  const int n = p.vertex_count();
  FVector f;
  BigInt c = 1;  // C(n, j)
  for (int j = 0; j <= n - 4; ++j) {
    f.counts.push_back(c);
    c = c * (n - j) / (j + 1);
  }
  f.counts.emplace_back(eta_formula(p.m, p.n));
  return f;
}

}  // namespace hexcut
