#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hexcut/cutcomplex.hpp"

namespace hexcut {

/// Number of relocated facets: mn - 2 for m >= 2, n - 1 for m = 1.
inline int beta(int m, int n) {
  HexParams{m, n}.validate();
  return m >= 2 ? m * n - 2 : n - 1;
}

/// A facet whose complement is the open neighbourhood of its centre.
struct TFacet {
  int index = 0;  // 1-based position in the tail
  std::array<Vertex, 3> complement{};
  Vertex center = 0;
};

/// T facets from their closed-form complements and centres, unchecked.
inline std::vector<TFacet> t_facets_formula(const HexParams& p) {
  p.validate();
  const int m = p.m, n = p.n, a = p.v1_boundary();
  std::vector<TFacet> out;
  int idx = 0;
  if (m == 1) {
    for (int i = 1; i <= n - 1; ++i) out.push_back({++idx, {2 * i + 2 * n, 2 * i + 2 * n + 2, 2 * i + 2 * n + 3}, 2 * i});
    return out;
  }
  for (int k = 1; k <= n - 1; ++k)
    for (int i = (k - 1) * m + 1; i <= k * m; ++i)
      out.push_back({++idx, {i + a + (k - 1), i + m + a + k, i + m + a + k + 1}, i + m + (k - 1)});
  for (int i = (n - 1) * m + 1; i <= n * m - 2; ++i)
    out.push_back({++idx, {i + a + n, i + m + a + n, i + m + a + n + 1}, i + m + n});
  return out;
}

/// T facets checked against the graph: complement = N(centre), centre in V1,
/// complement an independent subset of V2 with x3 = x2 + 1, strictly
/// increasing in lexicographic order.
inline std::vector<TFacet> t_facets(const HexGraph& g) {
  auto out = t_facets_formula(g.params());
  auto fail = [](const TFacet& t, const std::string& why) {
    throw Error(ErrorKind::TFacetInvariantViolated, "T_" + std::to_string(t.index) + ": " + why);
  };
  for (const auto& t : out) {
    const auto& c = t.complement;
    if (!g.graph().contains(t.center) || !g.graph().contains(c[2])) fail(t, "label out of range");
    const auto nb = g.neighbors(t.center);
    if (nb.size() != 3 || !std::equal(nb.begin(), nb.end(), c.begin())) fail(t, "complement is not N(centre)");
    if (!g.in_v1(t.center)) fail(t, "centre outside V1");
    for (Vertex v : c)
      if (!g.in_v2(v)) fail(t, "complement leaves V2");
    if (g.adjacent(c[0], c[1]) || g.adjacent(c[0], c[2]) || g.adjacent(c[1], c[2])) fail(t, "complement not independent");
    if (c[2] != c[1] + 1) fail(t, "last two complement labels not consecutive");
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i - 1].complement < out[i].complement)) fail(out[i], "not increasing");
  if (static_cast<int>(out.size()) != beta(g.params().m, g.params().n)) throw Error(ErrorKind::TFacetInvariantViolated, "count differs from beta");
  return out;
}

/// A linear order on the facets of a cut complex, held as complements.
class ShellingOrder {
 public:
  /// `facets` must hold each complement at most once; the last `tail_count`
  /// rows form the relocated tail. `t_schedule` is either empty or describes
  /// exactly those rows.
  ShellingOrder(int n_vertices, TupleList facets, std::size_t tail_count, std::vector<TFacet> t_schedule = {},
                std::optional<HexParams> hex = std::nullopt)
      : n_(n_vertices), facets_(std::move(facets)), position_(n_vertices, facets_.k()), tail_(std::move(t_schedule)), hex_(hex) {
    if (tail_count > facets_.size()) throw Error(ErrorKind::IncompleteOrder, "tail longer than order");
    if (!tail_.empty() && tail_.size() != tail_count) throw Error(ErrorKind::IncompleteOrder, "T schedule does not match tail");
    base_count_ = facets_.size() - tail_count;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (position_.find(facets_[i]) >= 0) throw Error(ErrorKind::IncompleteOrder, "duplicated facet at position " + std::to_string(i + 1));
      position_.set(facets_[i], static_cast<std::int64_t>(i));
    }
  }

  int vertex_count() const { return n_; }
  int k() const { return facets_.k(); }
  std::size_t size() const { return facets_.size(); }
  std::size_t base_count() const { return base_count_; }
  std::size_t tail_count() const { return facets_.size() - base_count_; }
  const std::vector<TFacet>& t_schedule() const { return tail_; }
  const std::optional<HexParams>& hex_params() const { return hex_; }
  const TupleList& facets() const { return facets_; }

  /// Complement at 0-based position `pos`.
  std::span<const Vertex> at(std::size_t pos) const { return facets_[pos]; }
  /// 0-based position of the facet with this complement, -1 if absent.
  std::int64_t position_of(std::span<const Vertex> complement) const { return position_.find(complement); }
  bool in_tail(std::size_t pos) const { return pos >= base_count_; }

 private:
  int n_;
  TupleList facets_;
  TupleIndex position_;
  std::vector<TFacet> tail_;
  std::size_t base_count_ = 0;
  std::optional<HexParams> hex_;
};

/// Plain order: ascending lexicographic order of complements.
inline ShellingOrder revlex_order(const CutComplex& cx) {
  return ShellingOrder(cx.vertex_count(), cx.complements(), 0, {}, cx.hex_params());
}

/// The relocated order for the 3-cut complex of H_{1 x m x n}: lexicographic
/// on complements, with T_1 .. T_beta removed and appended in index order.
inline ShellingOrder hex_shelling_order(const CutComplex& cx) {
  if (!cx.hex_params() || cx.k() != 3) throw Error(ErrorKind::InvalidParams, "relocated order needs the 3-cut complex of a hexagonal grid");
  const auto tail = t_facets_formula(*cx.hex_params());
  std::vector<char> moved(cx.facet_count(), 0);
  for (const auto& t : tail) {
    const auto pos = cx.find(t.complement);
    if (pos < 0) throw Error(ErrorKind::TFacetNotFound, "T_" + std::to_string(t.index) + " is not a facet");
    moved[static_cast<std::size_t>(pos)] = 1;
  }
  TupleList order(3);
  order.reserve(cx.facet_count());
  for (std::size_t i = 0; i < cx.facet_count(); ++i)
    if (!moved[i]) order.push_back(cx.complements()[i]);
  for (const auto& t : tail) order.push_back(t.complement);
  return ShellingOrder(cx.vertex_count(), std::move(order), tail.size(), tail, cx.hex_params());
}

/// The relocated order with T_{t_index} (1-based) put back at its
/// lexicographic slot among the base facets. Returns the order and the
/// 1-based position T_{t_index} now occupies.
inline std::pair<ShellingOrder, std::size_t> reinsert_t_facet(const CutComplex& cx, int t_index) {
  const auto full = hex_shelling_order(cx);
  const auto& tail = full.t_schedule();
  if (tail.empty()) throw Error(ErrorKind::BetaZero, "no T facets to reinsert");
  if (t_index < 1 || t_index > static_cast<int>(tail.size())) throw Error(ErrorKind::OrdinalOutOfRange, "T index");
  const auto& t = tail[static_cast<std::size_t>(t_index - 1)];
  TupleList order(3);
  order.reserve(full.size());
  std::size_t placed_at = 0;
  bool placed = false;
  const std::span<const Vertex> tc(t.complement);
  for (std::size_t i = 0; i < full.base_count(); ++i) {
    const auto f = full.at(i);
    if (!placed && std::lexicographical_compare(tc.begin(), tc.end(), f.begin(), f.end())) {
      placed_at = order.size() + 1;
      order.push_back(tc);
      placed = true;
    }
    order.push_back(f);
  }
  if (!placed) {
    placed_at = order.size() + 1;
    order.push_back(tc);
  }
  std::vector<TFacet> rest;
  for (const auto& u : tail)
    if (u.index != t_index) {
      order.push_back(u.complement);
      rest.push_back(u);
    }
  return {ShellingOrder(cx.vertex_count(), std::move(order), rest.size(), rest, cx.hex_params()), placed_at};
}

namespace detail {

/// Marks flags[lambda] = 1 for every lambda in Lambda_j (0-based j) and
/// returns |Lambda_j|. `flags` must be zeroed, size N + 1.
inline int fill_lambda(const ShellingOrder& order, std::size_t j, std::vector<std::uint8_t>& flags, std::vector<Vertex>& scratch) {
  const auto fj = order.at(j);
  const int n = order.vertex_count();
  const auto k = fj.size();
  scratch.resize(k);
  for (Vertex v : fj) flags[v] = 2;  // excluded marker
  int count = 0;
  for (Vertex lam = 1; lam <= n; ++lam) {
    if (flags[lam]) continue;
    for (std::size_t a = 0; a < k; ++a) {
      swap_one(fj, a, lam, scratch);
      const auto p = order.position_of(scratch);
      if (p >= 0 && static_cast<std::size_t>(p) < j) {
        flags[lam] = 1;
        ++count;
        break;
      }
    }
  }
  for (Vertex v : fj) flags[v] = 0;
  return count;
}

}  // namespace detail

/// Lambda_j for 1-based ordinal j: the vertices lambda outside F_j^c such that
/// swapping one complement entry for lambda lands on an earlier facet.
inline std::vector<Vertex> lambda_set(const ShellingOrder& order, std::size_t j) {
  if (j < 1 || j > order.size()) throw Error(ErrorKind::OrdinalOutOfRange, "ordinal " + std::to_string(j));
  std::vector<std::uint8_t> flags(order.vertex_count() + 1, 0);
  std::vector<Vertex> scratch;
  detail::fill_lambda(order, j - 1, flags, scratch);
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= order.vertex_count(); ++v)
    if (flags[v] == 1) out.push_back(v);
  return out;
}

enum class VerifyStrategy { Pairwise, LambdaComplement };

struct VerifyOptions {
  VerifyStrategy strategy = VerifyStrategy::Pairwise;
  int jobs = 1;
  /// Lambda-complement enumerates k-subsets of V \ Lambda_j when there are at
  /// most this many; otherwise that j falls back to the pairwise scan.
  std::uint64_t complement_subset_limit = 4096;
};

struct ShellingVerdict {
  bool ok = false;
  /// (i, j) with i < j, 1-based; the least failing j, then the least i.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// Throws IncompleteOrder unless `order` lists every facet of `cx` once.
inline void require_complete(const CutComplex& cx, const ShellingOrder& order) {
  if (order.size() != cx.facet_count() || order.k() != cx.k() || order.vertex_count() != cx.vertex_count())
    throw Error(ErrorKind::IncompleteOrder, "order has " + std::to_string(order.size()) + " facets, complex has " + std::to_string(cx.facet_count()));
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!cx.is_facet_complement(order.at(i))) throw Error(ErrorKind::IncompleteOrder, "position " + std::to_string(i + 1) + " is not a facet");
}

/// Checks the single-swap shelling condition for every pair i < j: some
/// element of F_i^c \ F_j^c must lie in Lambda_j.
inline ShellingVerdict verify_shelling(const CutComplex& cx, const ShellingOrder& order, const VerifyOptions& opt = {}) {
  require_complete(cx, order);
  const std::size_t total = order.size();
  const int n = order.vertex_count();
  const int k = order.k();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_j{kNone};
  std::mutex mu;
  std::size_t found_j = kNone, found_i = kNone;

  const int jobs = std::max(1, opt.jobs);
  std::vector<std::vector<std::uint8_t>> flags(jobs, std::vector<std::uint8_t>(n + 1, 0));
  std::vector<std::vector<Vertex>> scratch(jobs);

  parallel_tasks(total, jobs, [&](std::size_t j, int w) {
    if (j >= best_j.load(std::memory_order_relaxed)) return;
    auto& lam = flags[w];
    const int size = detail::fill_lambda(order, j, lam, scratch[w]);
    std::size_t bad = kNone;

    bool done = false;
    if (opt.strategy == VerifyStrategy::LambdaComplement) {
      std::vector<Vertex> pool;
      for (Vertex v = 1; v <= n; ++v)
        if (lam[v] != 1) pool.push_back(v);
      if (binomial(static_cast<std::int64_t>(pool.size()), k) <= opt.complement_subset_limit) {
        // An earlier facet violates the condition iff its complement avoids
        // Lambda_j, i.e. lies inside the pool.
        any_k_subset(pool, k, [&](std::span<const Vertex> t) {
          const auto p = order.position_of(t);
          if (p >= 0 && static_cast<std::size_t>(p) < j) bad = std::min(bad, static_cast<std::size_t>(p));
          return false;
        });
        done = true;
      }
    }
    if (!done && size < n - k) {
      // When Lambda_j = F_j every earlier complement meets it; skip the scan.
      if (k == 3) {
        for (std::size_t i = 0; i < j; ++i) {
          const auto c = order.at(i);
          if (!(lam[c[0]] | lam[c[1]] | lam[c[2]])) {
            bad = i;
            break;
          }
        }
      } else {
        for (std::size_t i = 0; i < j && bad == kNone; ++i) {
          bool meets = false;
          for (Vertex v : order.at(i)) meets = meets || lam[v] == 1;
          if (!meets) bad = i;
        }
      }
    }
    std::fill(lam.begin(), lam.end(), 0);

    if (bad != kNone) {
      std::lock_guard lock(mu);
      if (j < found_j) {
        found_j = j;
        found_i = bad;
        best_j.store(j, std::memory_order_relaxed);
      }
    }
  });

  ShellingVerdict v;
  v.ok = found_j == kNone;
  if (!v.ok) v.counterexample = std::make_pair(found_i + 1, found_j + 1);
  return v;
}

/// Ordered pairs the pairwise verifier inspects, about eta^2 / 2.
inline std::uint64_t verification_pair_estimate(std::uint64_t facets) { return facets * (facets > 0 ? facets - 1 : 0) / 2; }

/// Outcome of re-deriving why a T facet cannot stay at its lexicographic slot.
struct TObstruction {
  TFacet t;
  std::size_t lex_position = 0;      // 1-based slot in the plain order
  std::vector<Vertex> witness;       // {centre, N-1, N}
  std::size_t witness_position = 0;  // 1-based, must precede lex_position
  bool witness_is_earlier_facet = false;
  /// (lambda, alpha, candidate complement, obstruction) for each swap tried.
  struct Candidate {
    Vertex lambda;
    Vertex alpha;
    std::array<Vertex, 3> complement;
    std::string obstruction;  // "connected", "later", or "earlier" (a failure)
  };
  std::vector<Candidate> candidates;
  bool reproduced = false;
};

/// For each T_i at its lexicographic position j_i: the facet with complement
/// {c_i, N-1, N} precedes it, and no swap of a T_i^c entry for a lambda in
/// {c_i, N-1, N} \ T_i^c reaches an earlier facet: with lambda = c_i the
/// candidate induces a P3, otherwise it sorts after T_i.
inline std::vector<TObstruction> t_facet_obstructions(const CutComplex& cx) {
  if (!cx.hex_params() || cx.k() != 3) throw Error(ErrorKind::InvalidParams, "needs the 3-cut complex of a hexagonal grid");
  const auto tail = t_facets_formula(*cx.hex_params());
  if (tail.empty()) throw Error(ErrorKind::BetaZero, "beta = 0, no T facets");
  const Vertex n = cx.vertex_count();
  std::vector<TObstruction> out;
  for (const auto& t : tail) {
    TObstruction ob;
    ob.t = t;
    const auto jt = cx.find(t.complement);
    if (jt < 0) throw Error(ErrorKind::TFacetNotFound, "T_" + std::to_string(t.index));
    ob.lex_position = static_cast<std::size_t>(jt) + 1;
    ob.witness = {t.center, n - 1, n};
    const auto wp = cx.find(ob.witness);
    ob.witness_is_earlier_facet = wp >= 0 && wp < jt;
    ob.witness_position = wp >= 0 ? static_cast<std::size_t>(wp) + 1 : 0;
    bool ok = ob.witness_is_earlier_facet;
    std::array<Vertex, 3> cand{};
    for (Vertex lam : ob.witness) {
      if (std::find(t.complement.begin(), t.complement.end(), lam) != t.complement.end()) continue;
      for (std::size_t a = 0; a < 3; ++a) {
        swap_one(t.complement, a, lam, cand);
        const auto p = cx.find(cand);
        std::string why = p < 0 ? "connected" : (p > jt ? "later" : "earlier");
        if (why == "earlier") ok = false;
        ob.candidates.push_back({lam, t.complement[a], cand, why});
      }
    }
    ob.reproduced = ok;
    out.push_back(std::move(ob));
  }
  return out;
}

/// True iff every T facet fails the shelling condition at its lexicographic
/// slot for the reason above. Throws BetaZero when there are no T facets.
inline bool verify_t_facet_obstruction(const CutComplex& cx) {
  for (const auto& ob : t_facet_obstructions(cx))
    if (!ob.reproduced) return false;
  return true;
}

enum class OrderingRule { Revlex, RevlexWithNeighborhoodTail };

/// Plain lexicographic order, optionally moving every facet whose complement
/// is an open neighbourhood N(v) with |N(v)| = k to the end (in complement
/// order).
inline ShellingOrder order_by_rule(const CutComplex& cx, OrderingRule rule) {
  if (rule == OrderingRule::Revlex) return revlex_order(cx);
  const auto& g = cx.graph();
  std::vector<std::vector<Vertex>> nbhds;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) == cx.k() && cx.is_facet_complement(nb)) nbhds.emplace_back(nb.begin(), nb.end());
  }
  std::sort(nbhds.begin(), nbhds.end());
  nbhds.erase(std::unique(nbhds.begin(), nbhds.end()), nbhds.end());
  std::vector<char> moved(cx.facet_count(), 0);
  for (const auto& t : nbhds) moved[static_cast<std::size_t>(cx.find(t))] = 1;
  TupleList order(cx.k());
  for (std::size_t i = 0; i < cx.facet_count(); ++i)
    if (!moved[i]) order.push_back(cx.complements()[i]);
  for (const auto& t : nbhds) order.push_back(t);
  return ShellingOrder(cx.vertex_count(), std::move(order), nbhds.size(), {}, cx.hex_params());
}

struct ExploreOptions {
  int jobs = 1;
  std::uint64_t max_pairs = 500'000'000;
  bool force = false;
};

struct ExploreResult {
  int k = 0;
  OrderingRule rule = OrderingRule::Revlex;
  std::size_t facet_count = 0;
  std::size_t tail_count = 0;
  ShellingVerdict verdict;
};

/// Mechanical shelling check of the k-cut complex of `g` under a named rule.
/// Makes no claim beyond the verdict.
inline ExploreResult generic_k_order_check(const Graph& g, int k, OrderingRule rule, std::optional<HexParams> hex = std::nullopt,
                                           const ExploreOptions& opt = {}) {
  const auto cx = enumerate_facets(g, k, hex, EnumerateOptions{opt.jobs});
  if (!opt.force && verification_pair_estimate(cx.facet_count()) > opt.max_pairs)
    throw Error(ErrorKind::ResourceGuard, std::to_string(cx.facet_count()) + " facets exceed the pair guard");
  const auto order = order_by_rule(cx, rule);
  ExploreResult r;
  r.k = k;
  r.rule = rule;
  r.facet_count = cx.facet_count();
  r.tail_count = order.tail_count();
  r.verdict = verify_shelling(cx, order, VerifyOptions{VerifyStrategy::Pairwise, opt.jobs});
  return r;
}

}  // namespace hexcut
