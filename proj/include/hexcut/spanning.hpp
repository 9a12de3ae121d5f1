#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hexcut/shelling.hpp"

namespace hexcut {

using VertexPair = std::pair<Vertex, Vertex>;

/// Spanning facets of a verified order.
///
/// A facet is spanning iff Lambda = F, i.e. |Lambda| = N - k. For k = 3,
/// `non_spanning_pairs` lists every (x, y), x < y < N, such that {x, y, N} is
/// not the complement of a spanning facet (either non-spanning, or not a
/// facet at all because it induces a P3).
struct SpanningReport {
  int vertex_count = 0;
  std::vector<char> spanning;  // per 0-based order position
  std::int64_t psi = 0;
  std::vector<std::vector<Vertex>> spanning_complements;  // lexicographic
  std::vector<VertexPair> non_spanning_pairs;               // lexicographic
};

inline SpanningReport spanning_facets(const CutComplex& cx, const ShellingOrder& order, const ShellingVerdict& verdict,
                                      bool allow_unverified = false, int jobs = 1) {
  if (!verdict.ok && !allow_unverified) throw Error(ErrorKind::UnverifiedOrder, "spanning facets need a verified shelling order");
  require_complete(cx, order);
  const int n = order.vertex_count();
  const int k = order.k();
  SpanningReport r;
  r.vertex_count = n;
  r.spanning.assign(order.size(), 0);
  std::vector<std::vector<std::uint8_t>> flags(std::max(1, jobs), std::vector<std::uint8_t>(n + 1, 0));
  std::vector<std::vector<Vertex>> scratch(flags.size());
  parallel_tasks(order.size(), jobs, [&](std::size_t j, int w) {
    const int size = detail::fill_lambda(order, j, flags[w], scratch[w]);
    std::fill(flags[w].begin(), flags[w].end(), 0);
    r.spanning[j] = size == n - k ? 1 : 0;
  });
  for (std::size_t j = 0; j < order.size(); ++j)
    if (r.spanning[j]) {
      ++r.psi;
      const auto c = order.at(j);
      r.spanning_complements.emplace_back(c.begin(), c.end());
    }
  std::sort(r.spanning_complements.begin(), r.spanning_complements.end());
  if (k == 3) {
    std::set<VertexPair> spanning_pairs;
    for (const auto& c : r.spanning_complements)
      if (c[2] == n) spanning_pairs.insert({c[0], c[1]});
    for (Vertex x = 1; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        if (!spanning_pairs.count({x, y})) r.non_spanning_pairs.push_back({x, y});
  }
  return r;
}

/// Every spanning facet has N in its complement, and no tail facet spans.
inline bool check_spanning_excludes_last_vertex(const ShellingOrder& order, const SpanningReport& report) {
  const Vertex n = order.vertex_count();
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (!report.spanning[j]) continue;
    if (order.in_tail(j)) return false;
    const auto c = order.at(j);
    if (std::find(c.begin(), c.end(), n) == c.end()) return false;
  }
  return true;
}

/// psi = C(N-1, 2) - ((6m+2)n + 2m - 4). The subtracted term equals delta.
inline std::int64_t psi_formula(int m, int n) {
  HexParams p{m, n};
  p.validate();
  return static_cast<std::int64_t>(binomial(p.vertex_count() - 1, 2)) - ((6LL * m + 2) * n + (2LL * m - 4));
}

// ---------------------------------------------------------------------------
// Listed non-spanning pair families.

struct TaggedPair {
  Vertex x = 0;
  Vertex y = 0;
  int family = 0;  // 1..8
};

struct PairTable {
  std::vector<TaggedPair> pairs;      // deduplicated, first family kept, sorted
  std::array<int, 8> raw_counts{};    // pairs emitted per family before dedup
  std::vector<TaggedPair> malformed;  // emitted pairs violating x < y <= N-1

  /// All emitted pairs were in range.
  bool well_formed() const { return malformed.empty(); }
  int raw_total() const {
    int s = 0;
    for (int c : raw_counts) s += c;
    return s;
  }
  std::set<VertexPair> as_set() const {
    std::set<VertexPair> s;
    for (const auto& p : pairs) s.insert({p.x, p.y});
    return s;
  }
};

/// The eight listed families of non-spanning pairs, emitted exactly as listed
/// (with A = m + n + mn, N = 2A):
///   1. i in [1, m-1]: (i,i+1), (i,i+m), (i,i+m+1), (i,i+A)
///   2. i = m: (i,i+m), (i,i+m+1), (i,i+A)
///   3. r in [1, n-1], i in [r(m+1), r(m+1)+m-1]:
///      (i,i+1), (i,i+m+1), (i,i+m+2), (i,i+(m+1)n), (i,i+A+1)
///   4. i = r(m+1)-1, r in [2, n]: (i,i+m+1), (i,i+(m+1)n)
///   5. i in [n+mn+1, A-1]: (i,i+1), (i,i+(m+1)n), (i,i+A)
///   6. i = (m+1)n: (i,i+1), (i,i+(m+1)n)
///   7. i = A: (i,i+(m+1)n)
///   8. i in [A+1, N-m-1] minus {2n+2mn} and {A+t(m+1) : t in [1, n-1]}: (i,i+m+1)
inline PairTable non_spanning_pair_table(int m, int n) {
  HexParams p{m, n};
  p.validate();
  const int a = p.v1_boundary();
  const int nv = p.vertex_count();
  const int h = (m + 1) * n;
  PairTable t;
  std::set<VertexPair> seen;
  auto emit = [&](int family, int x, int y) {
    ++t.raw_counts[static_cast<std::size_t>(family - 1)];
    if (!(x >= 1 && x < y && y <= nv - 1)) {
      t.malformed.push_back({x, y, family});
      return;
    }
    if (seen.insert({x, y}).second) t.pairs.push_back({x, y, family});
  };
  for (int i = 1; i <= m - 1; ++i)
    for (int y : {i + 1, i + m, i + m + 1, i + a}) emit(1, i, y);
  for (int y : {2 * m, 2 * m + 1, m + a}) emit(2, m, y);
  for (int r = 1; r <= n - 1; ++r)
    for (int i = r * (m + 1); i <= r * (m + 1) + m - 1; ++i)
      for (int y : {i + 1, i + m + 1, i + m + 2, i + h, i + a + 1}) emit(3, i, y);
  for (int r = 2; r <= n; ++r) {
    const int i = r * (m + 1) - 1;
    for (int y : {i + m + 1, i + h}) emit(4, i, y);
  }
  for (int i = n + m * n + 1; i <= a - 1; ++i)
    for (int y : {i + 1, i + h, i + a}) emit(5, i, y);
  for (int y : {h + 1, 2 * h}) emit(6, h, y);
  emit(7, a, a + h);
  std::set<int> skip{2 * n + 2 * m * n};
  for (int s = 1; s <= n - 1; ++s) skip.insert(a + s * (m + 1));
  for (int i = a + 1; i <= nv - m - 1; ++i)
    if (!skip.count(i)) emit(8, i, i + m + 1);
  std::sort(t.pairs.begin(), t.pairs.end(), [](const TaggedPair& l, const TaggedPair& r) { return std::pair(l.x, l.y) < std::pair(r.x, r.y); });
  return t;
}

struct PairDiff {
  std::vector<VertexPair> missing_from_table;  // computed non-spanning, not listed
  std::vector<VertexPair> extra_in_table;      // listed, but computed spanning
  bool equal() const { return missing_from_table.empty() && extra_in_table.empty(); }
};

/// Set comparison against the computed pairs, which are the ground truth.
inline PairDiff compare_pair_table(const PairTable& table, const SpanningReport& report) {
  const auto listed = table.as_set();
  const std::set<VertexPair> computed(report.non_spanning_pairs.begin(), report.non_spanning_pairs.end());
  PairDiff d;
  std::set_difference(computed.begin(), computed.end(), listed.begin(), listed.end(), std::back_inserter(d.missing_from_table));
  std::set_difference(listed.begin(), listed.end(), computed.begin(), computed.end(), std::back_inserter(d.extra_in_table));
  return d;
}

// ---------------------------------------------------------------------------
// Listed obstruction vertices for non-spanning pairs.

/// A listed pair with its proposed obstruction vertex (sometimes two
/// alternatives are listed; either may be used).
struct WitnessEntry {
  std::string type;  // "1a", "1b", "2", "3a", "3b", "3c", "4", "5a".."5d", "6", "7"
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> lambdas;
};

/// Obstruction vertices as listed per pair type, A = m + n + mn:
///   1a (i,i+1), i in [1,m-1] or [(m+1)n, A-1]          lambda = i+A+1
///   1b (i,i+1), i in row r in [1,n-1]                  lambda = i+A+2
///   2  (i,i+m), i in [1,m]                             lambda = (m+1)n+i
///   3a (i,i+m+1), i in [1,m] or i = r(m+1)-1, r>=2     lambda = i+A+1
///   3b (i,i+m+1), i in row r                           lambda = i+A+2
///   3c (i,i+m+1), i in [A+1, N-m-1] minus exclusions   lambda = i+m+2
///   4  (i,i+m+2), i in row r                           lambda = i+A+2
///   5a (i,i+(m+1)n), i in row r                        lambda = i+A+1 or i+A+2
///   5b (i,i+(m+1)n), i = r(m+1)-1, r>=2, or i = m+1    lambda = i+A+1
///   5c (i,i+(m+1)n), i in [n+mn+1, A-1]                lambda = i+A or i+A+1
///   5d (A, A+(m+1)n)                                   lambda = 2A
///   6  (i,i+A), i in [1,m] or [n+mn+1, A-1]            lambda = i+A+1
///   7  (i,i+A+1), i in row r                           lambda = i+A+2
/// "Row r" means i in [r(m+1), r(m+1)+m-1].
inline std::vector<WitnessEntry> listed_witnesses(int m, int n) {
  HexParams p{m, n};
  p.validate();
  const int a = p.v1_boundary(), nv = p.vertex_count(), h = (m + 1) * n;
  std::vector<int> rows;
  for (int r = 1; r <= n - 1; ++r)
    for (int i = r * (m + 1); i <= r * (m + 1) + m - 1; ++i) rows.push_back(i);
  std::vector<int> ends;
  for (int r = 2; r <= n; ++r) ends.push_back(r * (m + 1) - 1);
  std::vector<WitnessEntry> w;
  auto add = [&](std::string type, int x, int y, std::vector<Vertex> l) { w.push_back({std::move(type), x, y, std::move(l)}); };

  for (int i = 1; i <= m - 1; ++i) add("1a", i, i + 1, {i + a + 1});
  for (int i = h; i <= a - 1; ++i) add("1a", i, i + 1, {i + a + 1});
  for (int i : rows) add("1b", i, i + 1, {i + a + 2});
  for (int i = 1; i <= m; ++i) add("2", i, i + m, {h + i});
  for (int i = 1; i <= m; ++i) add("3a", i, i + m + 1, {i + a + 1});
  for (int i : ends) add("3a", i, i + m + 1, {i + a + 1});
  for (int i : rows) add("3b", i, i + m + 1, {i + a + 2});
  std::set<int> skip{2 * n + 2 * m * n};
  for (int s = 1; s <= n; ++s) skip.insert(a + s * (m + 1));
  for (int i = a + 1; i <= nv - m - 1; ++i)
    if (!skip.count(i)) add("3c", i, i + m + 1, {i + m + 2});
  for (int i : rows) add("4", i, i + m + 2, {i + a + 2});
  for (int i : rows) add("5a", i, i + h, {i + a + 1, i + a + 2});
  for (int i : ends) add("5b", i, i + h, {i + a + 1});
  add("5b", m + 1, m + 1 + h, {m + 1 + a + 1});
  for (int i = n + m * n + 1; i <= a - 1; ++i) add("5c", i, i + h, {i + a, i + a + 1});
  add("5d", a, a + h, {2 * a});
  for (int i = 1; i <= m; ++i) add("6", i, i + a, {i + a + 1});
  for (int i = n + m * n + 1; i <= a - 1; ++i) add("6", i, i + a, {i + a + 1});
  for (int i : rows) add("7", i, i + a + 1, {i + a + 2});
  return w;
}

/// Why a single swap candidate does not realise F minus {lambda}.
enum class Obstruction {
  Connected,  // candidate complement induces a P3, so it is not a facet
  Later,      // candidate sits after S in the base order
  TFacet,     // candidate is a relocated tail facet
  None,       // candidate is an earlier facet: lambda does not obstruct
};

inline const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::Connected: return "connected";
    case Obstruction::Later: return "later";
    case Obstruction::TFacet: return "t_facet";
    case Obstruction::None: return "earlier_facet";
  }
  return "?";
}

struct SwapCandidate {
  Vertex alpha = 0;
  std::array<Vertex, 3> complement{};
  Obstruction obstruction = Obstruction::None;
};

enum class WitnessStatus {
  Obstructs,     // some listed lambda blocks every swap
  Fails,         // no listed lambda blocks; reported with trace
  Malformed,     // pair or lambda out of range / lambda inside S^c
  PairNotFacet,  // {x, y, N} induces a P3; the pair is non-spanning trivially
};

inline const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Obstructs: return "obstructs";
    case WitnessStatus::Fails: return "fails";
    case WitnessStatus::Malformed: return "malformed";
    case WitnessStatus::PairNotFacet: return "pair_not_facet";
  }
  return "?";
}

struct WitnessCheck {
  WitnessEntry entry;
  WitnessStatus status = WitnessStatus::Fails;
  std::optional<Vertex> used_lambda;
  /// Trace of the swaps for the first listed lambda (or the used one).
  std::vector<SwapCandidate> trace;
  /// Least lambda that does obstruct, if any, found by exhaustive scan.
  std::optional<Vertex> computed_lambda;
};

/// Classifies the three swaps of lambda into S^c = {x, y, N}.
inline std::vector<SwapCandidate> swap_trace(const ShellingOrder& order, const std::array<Vertex, 3>& s, std::size_t s_pos, Vertex lambda) {
  std::vector<SwapCandidate> out;
  std::array<Vertex, 3> c{};
  for (std::size_t a = 0; a < 3; ++a) {
    swap_one(s, a, lambda, c);
    SwapCandidate sc{s[a], c, Obstruction::None};
    const auto p = order.position_of(c);
    if (p < 0) sc.obstruction = Obstruction::Connected;
    else if (order.in_tail(static_cast<std::size_t>(p)) && static_cast<std::size_t>(p) > s_pos) sc.obstruction = Obstruction::TFacet;
    else if (static_cast<std::size_t>(p) > s_pos) sc.obstruction = Obstruction::Later;
    out.push_back(sc);
  }
  return out;
}

inline bool blocks(const std::vector<SwapCandidate>& trace) {
  for (const auto& c : trace)
    if (c.obstruction == Obstruction::None) return false;
  return true;
}

/// Checks each listed obstruction vertex against the order. A failing entry
/// keeps its candidate trace and the least lambda that really obstructs.
inline std::vector<WitnessCheck> check_witnesses(const ShellingOrder& order, const std::vector<WitnessEntry>& entries) {
  const Vertex n = order.vertex_count();
  std::vector<WitnessCheck> out;
  for (const auto& e : entries) {
    WitnessCheck wc;
    wc.entry = e;
    const std::array<Vertex, 3> s{e.x, e.y, n};
    const bool pair_ok = e.x >= 1 && e.x < e.y && e.y < n;
    if (!pair_ok) {
      wc.status = WitnessStatus::Malformed;
      out.push_back(std::move(wc));
      continue;
    }
    const auto sp = order.position_of(s);
    if (sp < 0) {
      wc.status = WitnessStatus::PairNotFacet;
      out.push_back(std::move(wc));
      continue;
    }
    const auto spos = static_cast<std::size_t>(sp);
    bool any_valid = false;
    wc.status = WitnessStatus::Fails;
    for (Vertex lam : e.lambdas) {
      if (lam < 1 || lam > n || lam == e.x || lam == e.y || lam == n) continue;
      any_valid = true;
      auto trace = swap_trace(order, s, spos, lam);
      if (blocks(trace)) {
        wc.status = WitnessStatus::Obstructs;
        wc.used_lambda = lam;
        wc.trace = std::move(trace);
        break;
      }
      if (wc.trace.empty()) wc.trace = std::move(trace);
    }
    if (!any_valid) wc.status = WitnessStatus::Malformed;
    if (wc.status != WitnessStatus::Obstructs) {
      for (Vertex lam = 1; lam < n; ++lam) {
        if (lam == e.x || lam == e.y) continue;
        if (blocks(swap_trace(order, s, spos, lam))) {
          wc.computed_lambda = lam;
          break;
        }
      }
    }
    out.push_back(std::move(wc));
  }
  return out;
}

}  // namespace hexcut
