#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hexcut/cutcomplex.hpp"
#include "hexcut/spanning.hpp"

namespace hexcut {

inline constexpr int kDefaultHomologyLimit = 16;

/// Finite simplicial complex on [1, n], n <= 30, with every face materialised
/// as a vertex bitmask (bit v-1 for vertex v). Faces of each size are kept in
/// ascending mask order, which gives the row/column order of the boundary
/// matrices.
class FaceComplex {
 public:
  /// Downward closure of the given facets.
  static FaceComplex from_facets(int n, const std::vector<std::uint32_t>& facets, int max_vertices = kDefaultHomologyLimit) {
    if (n > max_vertices || n > 30)
      throw Error(ErrorKind::SizeLimitExceeded, "face enumeration needs N <= " + std::to_string(max_vertices) + ", N=" + std::to_string(n));
    FaceComplex fc;
    fc.n_ = n;
    const std::size_t space = std::size_t{1} << n;
    std::vector<char> in(space, 0);
    for (auto f : facets) in[f] = 1;
    for (std::size_t mask = space; mask-- > 0;) {
      if (!in[mask]) continue;
      for (auto rest = mask; rest; rest &= rest - 1) in[mask & ~(rest & (~rest + 1))] = 1;
    }
    fc.ordinal_.assign(space, -1);
    int top = -1;
    for (std::size_t mask = 0; mask < space; ++mask)
      if (in[mask]) top = std::max(top, std::popcount(mask));
    fc.by_size_.resize(static_cast<std::size_t>(top + 1));
    for (std::size_t mask = 0; mask < space; ++mask)
      if (in[mask]) {
        auto& bucket = fc.by_size_[static_cast<std::size_t>(std::popcount(mask))];
        fc.ordinal_[mask] = static_cast<std::int32_t>(bucket.size());
        bucket.push_back(static_cast<std::uint32_t>(mask));
      }
    return fc;
  }

  static FaceComplex from_cut_complex(const CutComplex& cx, int max_vertices = kDefaultHomologyLimit) {
    const int n = cx.vertex_count();
    if (n > max_vertices || n > 30)
      throw Error(ErrorKind::SizeLimitExceeded, "homology needs N <= " + std::to_string(max_vertices) + ", N=" + std::to_string(n));
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> facets;
    for (std::size_t i = 0; i < cx.facet_count(); ++i) {
      std::uint32_t c = 0;
      for (Vertex v : cx.complements()[i]) c |= std::uint32_t{1} << (v - 1);
      facets.push_back(full & ~c);
    }
    return from_facets(n, facets, max_vertices);
  }

  int vertex_count() const { return n_; }
  /// Highest face dimension.
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }
  /// Faces of dimension p (size p + 1); p = -1 gives the empty face.
  const std::vector<std::uint32_t>& faces(int p) const {
    static const std::vector<std::uint32_t> none;
    const auto s = static_cast<std::size_t>(p + 1);
    return s < by_size_.size() ? by_size_[s] : none;
  }
  std::int32_t ordinal(std::uint32_t mask) const { return ordinal_[mask]; }

  FVector f_vector() const {
    FVector f;
    for (const auto& b : by_size_) f.counts.emplace_back(b.size());
    return f;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::vector<std::int32_t> ordinal_;
};

/// Boundary map from dimension p to p - 1 over GF(2), stored by column. Each
/// column lists the ordinals of its codimension-1 faces, ascending.
struct BoundaryMatrixGF2 {
  int p = 0;
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

inline std::vector<std::uint32_t> boundary_column(const FaceComplex& fc, std::uint32_t face) {
  std::vector<std::uint32_t> col;
  for (auto rest = face; rest; rest &= rest - 1) {
    const auto sub = face & ~(rest & (~rest + 1));
    col.push_back(static_cast<std::uint32_t>(fc.ordinal(sub)));
  }
  std::sort(col.begin(), col.end());
  return col;
}

inline BoundaryMatrixGF2 boundary_matrix(const FaceComplex& fc, int p) {
  BoundaryMatrixGF2 b;
  b.p = p;
  b.rows = fc.faces(p - 1).size();
  for (auto f : fc.faces(p)) b.columns.push_back(boundary_column(fc, f));
  return b;
}

/// Samples columns of the p-boundary and checks that their boundary vanishes.
inline bool boundary_squared_vanishes(const FaceComplex& fc, int p, std::size_t samples, std::uint32_t seed = 1) {
  const auto& faces = fc.faces(p);
  if (faces.empty() || p < 1) return true;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto face = faces[pick(rng)];
    std::vector<int> parity(fc.faces(p - 2).size(), 0);
    for (auto rest = face; rest; rest &= rest - 1) {
      const auto sub = face & ~(rest & (~rest + 1));
      for (auto r : boundary_column(fc, sub)) parity[r] ^= 1;
    }
    for (int x : parity)
      if (x) return false;
  }
  return true;
}

/// Reduced Betti numbers over GF(2): entry p + 1 holds b~_p for p = -1..d.
struct BettiVector {
  std::vector<std::int64_t> values;

  std::int64_t at(int p) const {
    const auto i = static_cast<std::size_t>(p + 1);
    return i < values.size() ? values[i] : 0;
  }
  std::int64_t euler() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i % 2 == 0 ? -1 : 1) * values[i];
    return s;
  }
};

namespace detail {

inline void xor_into(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& other, std::vector<std::uint32_t>& tmp) {
  tmp.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(tmp));
  acc.swap(tmp);
}

}  // namespace detail

/// Ranks of every boundary map by column reduction, top dimension first. A
/// p-face that is the pivot row of a reduced (p+1)-column is skipped when
/// reducing the p-boundary: its column is a combination of earlier ones.
inline std::vector<std::int64_t> boundary_ranks(const FaceComplex& fc) {
  const int d = fc.dimension();
  std::vector<std::int64_t> rank(static_cast<std::size_t>(d + 2), 0);  // rank[p + 1] = rank of boundary_p
  std::vector<char> cleared;  // over p-faces, filled while reducing boundary_{p+1}
  std::vector<std::uint32_t> tmp;
  for (int p = d; p >= 0; --p) {
    const auto& faces = fc.faces(p);
    const std::size_t rows = fc.faces(p - 1).size();
    std::vector<std::int32_t> pivot_col(rows, -1);
    std::vector<std::vector<std::uint32_t>> reduced(faces.size());
    std::vector<char> next_cleared(rows, 0);
    std::int64_t r = 0;
    for (std::size_t c = 0; c < faces.size(); ++c) {
      if (!cleared.empty() && cleared[c]) continue;
      auto col = boundary_column(fc, faces[c]);
      while (!col.empty() && pivot_col[col.back()] >= 0) detail::xor_into(col, reduced[static_cast<std::size_t>(pivot_col[col.back()])], tmp);
      if (!col.empty()) {
        pivot_col[col.back()] = static_cast<std::int32_t>(c);
        next_cleared[col.back()] = 1;
        reduced[c] = std::move(col);
        ++r;
      }
    }
    rank[static_cast<std::size_t>(p + 1)] = r;
    cleared = std::move(next_cleared);
  }
  return rank;
}

/// b~_p = dim C_p - rank boundary_p - rank boundary_{p+1}, with the empty
/// face in C_{-1}.
inline BettiVector betti_numbers(const FaceComplex& fc) {
  const int d = fc.dimension();
  const auto rank = boundary_ranks(fc);
  BettiVector b;
  for (int p = -1; p <= d; ++p) {
    const auto cp = static_cast<std::int64_t>(fc.faces(p).size());
    const std::int64_t out = p >= 0 ? rank[static_cast<std::size_t>(p + 1)] : 0;
    const std::int64_t in = p + 1 <= d ? rank[static_cast<std::size_t>(p + 2)] : 0;
    b.values.push_back(cp - out - in);
  }
  return b;
}

inline BettiVector betti_numbers(const CutComplex& cx, int max_vertices = kDefaultHomologyLimit) {
  return betti_numbers(FaceComplex::from_cut_complex(cx, max_vertices));
}

/// Reduced Euler characteristic of the 3-cut complex of H_{1 x m x n}.
///
/// Alternating sum over the closed-form f-vector: with f_{j-1} = C(N, j) for
/// j <= N-4 and f_{N-4} = eta,
///   sum_{j=0}^{N-4} (-1)^{j-1} C(N, j) + eta = -C(N-1, 3) + eta
///                                            = C(N-1, 2) - delta
/// using sum_{j<=M} (-1)^j C(N, j) = (-1)^M C(N-1, M) and N even. The sum is
/// evaluated term by term in arbitrary precision.
inline std::int64_t reduced_euler_closed_form(int m, int n) {
  return f_vector_closed_form(HexParams{m, n}).reduced_euler().convert_to<std::int64_t>();
}

/// Reduced Euler characteristic from an enumerated f-vector.
inline std::int64_t reduced_euler(const CutComplex& cx, int max_vertices = kDefaultExhaustiveLimit) {
  return f_vector_exhaustive(cx, max_vertices).reduced_euler().convert_to<std::int64_t>();
}

struct WedgeOptions {
  int jobs = 1;
  int homology_limit = kDefaultHomologyLimit;
};

/// Outcome of the four independent checks on the wedge-of-spheres count.
/// An empty optional means the check did not run.
struct WedgeVerdict {
  HexParams params;
  std::int64_t psi = 0;
  int dimension = 0;
  std::optional<bool> shelling;
  std::optional<bool> spanning_eq_psi;
  std::optional<bool> euler_eq_psi;
  std::optional<bool> betti;
  std::optional<ShellingVerdict> shelling_verdict;

  bool ok() const {
    for (const auto& c : {shelling, spanning_eq_psi, euler_eq_psi, betti})
      if (c && !*c) return false;
    return true;
  }
};

inline WedgeVerdict wedge_claim_check(int m, int n, const WedgeOptions& opt = {}) {
  const HexParams p{m, n};
  WedgeVerdict v;
  v.params = p;
  v.psi = psi_formula(m, n);
  v.dimension = p.vertex_count() - 4;
  const auto g = build_hex_graph(p);
  const auto cx = enumerate_facets(g, 3, EnumerateOptions{opt.jobs});
  const auto order = hex_shelling_order(cx);
  const auto verdict = verify_shelling(cx, order, VerifyOptions{VerifyStrategy::Pairwise, opt.jobs});
  v.shelling_verdict = verdict;
  v.shelling = verdict.ok;
  if (verdict.ok) {
    const auto report = spanning_facets(cx, order, verdict, false, opt.jobs);
    v.spanning_eq_psi = report.psi == v.psi;
  } else {
    v.spanning_eq_psi = false;
  }
  v.euler_eq_psi = reduced_euler_closed_form(m, n) == v.psi;
  if (p.vertex_count() <= opt.homology_limit) {
    const auto b = betti_numbers(cx, opt.homology_limit);
    bool ok = true;
    for (int q = -1; q <= cx.dimension(); ++q) ok = ok && b.at(q) == (q == v.dimension ? v.psi : 0);
    v.betti = ok;
  }
  return v;
}

}  // namespace hexcut
