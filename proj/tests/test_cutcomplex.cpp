#include <gtest/gtest.h>

#include <random>

#include "hexcut/cutcomplex.hpp"
#include "oracles.hpp"

using namespace hexcut;

namespace {

std::vector<std::vector<Vertex>> rows(const TupleList& t) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.row(i));
  return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph(n, e);
}

}  // namespace

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(binomial(68, 3), 50116u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(240, 120), kSaturated);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), oracle::choose(n, k));
}

TEST(Combinatorics, ColexRankIsBijective) {
  SubsetRanker r(9, 4);
  std::vector<char> hit(r.total(), 0);
  for (auto& s : oracle::k_subsets(9, 4)) {
    const auto x = r.rank(s);
    ASSERT_LT(x, r.total());
    EXPECT_FALSE(hit[x]);
    hit[x] = 1;
  }
}

TEST(CutComplex, HexagonHasFourteenFacets) {
  const auto g = build_hex_graph({1, 1});
  const auto cx = enumerate_facets(g, 3);
  // 20 triples minus the 6 consecutive arcs of the hexagon.
  EXPECT_EQ(cx.facet_count(), 14u);
  EXPECT_EQ(cx.dimension(), 2);
  EXPECT_EQ(rows(cx.complements()), oracle::disconnected_k_subsets(g.graph(), 3));
}

TEST(CutComplex, DeltaEtaAgreeWithBruteForce) {
  std::vector<std::pair<int, int>> grid{{1, 5}, {1, 6}, {5, 1}, {6, 1}};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) grid.emplace_back(m, n);
  for (auto [m, n] : grid) {
    SCOPED_TRACE(testing::Message() << m << "x" << n);
    const auto g = build_hex_graph({m, n});
    const auto cx = enumerate_facets(g, 3);
    const auto nv = g.vertex_count();
    const auto p3 = oracle::induced_p3_count(g.graph());
    EXPECT_EQ(p3, delta_formula(m, n));
    EXPECT_EQ(static_cast<std::int64_t>(cx.facet_count()), eta_formula(m, n));
    EXPECT_EQ(static_cast<std::int64_t>(cx.facet_count()), static_cast<std::int64_t>(oracle::choose(nv, 3)) - p3);
  }
}

TEST(CutComplex, FourBySixCounts) {
  EXPECT_EQ(delta_formula(4, 6), 160);
  EXPECT_EQ(eta_formula(4, 6), 49956);
  EXPECT_EQ(eta_formula(2, 2), 532);
  const auto cx = enumerate_facets(build_hex_graph({4, 6}), 3, EnumerateOptions{2});
  EXPECT_EQ(cx.facet_count(), 49956u);
}

TEST(CutComplex, LexicographicAndIndexed) {
  const auto cx = enumerate_facets(build_hex_graph({2, 3}), 3);
  const auto& c = cx.complements();
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_TRUE(std::lexicographical_compare(c[i - 1].begin(), c[i - 1].end(), c[i].begin(), c[i].end()));
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(cx.find(c[i]), static_cast<std::int64_t>(i));
  std::vector<Vertex> p3{1, 2, 3};
  const bool conn = cx.graph().is_connected_subset(p3);
  EXPECT_EQ(cx.is_facet_complement(p3), !conn);
}

TEST(CutComplex, ParallelEnumerationIsDeterministic) {
  const auto g = build_hex_graph({3, 3});
  for (int k : {2, 3, 4}) {
    const auto a = enumerate_facets(g, k, EnumerateOptions{1});
    const auto b = enumerate_facets(g, k, EnumerateOptions{4});
    EXPECT_EQ(rows(a.complements()), rows(b.complements()));
  }
}

TEST(CutComplex, RandomGraphsMatchBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 5;
    const auto g = random_graph(n, 0.35, rng);
    for (int k = 2; k <= std::min(5, n - 1); ++k) {
      const auto cx = enumerate_facets(g, k, std::nullopt, EnumerateOptions{1 + trial % 3});
      ASSERT_EQ(rows(cx.complements()), oracle::disconnected_k_subsets(g, k)) << "trial " << trial << " k " << k;
    }
  }
}

TEST(CutComplex, KOutOfRange) {
  const auto g = build_hex_graph({1, 1});
  EXPECT_THROW(enumerate_facets(g, 0), Error);
  EXPECT_THROW(enumerate_facets(g, 6), Error);
  try {
    enumerate_facets(g, 6);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KOutOfRange);
  }
}

TEST(CutComplex, SubsetGuard) {
  EnumerateOptions opt;
  opt.max_subsets = 100;
  try {
    enumerate_facets(build_hex_graph({2, 2}), 3, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceGuard);
  }
}

TEST(CutComplex, IsFace) {
  const auto cx = enumerate_facets(cycle_graph(6), 3);
  std::vector<Vertex> alt{2, 4, 6}, arc{1, 2, 3}, big{1, 2, 3, 4}, empty;
  EXPECT_TRUE(is_face(cx, alt));  // complement {1,3,5} is independent
  EXPECT_FALSE(is_face(cx, arc)); // complement {4,5,6} is a path
  EXPECT_FALSE(is_face(cx, big));
  EXPECT_TRUE(is_face(cx, empty));
  std::vector<Vertex> bad{0};
  EXPECT_THROW(is_face(cx, bad), Error);
}

TEST(CutComplex, IsFaceMatchesFacetContainment) {
  const auto cx = enumerate_facets(build_hex_graph({1, 2}), 3);
  const int n = cx.vertex_count();
  std::vector<oracle::Set> facets;
  for (std::size_t i = 0; i < cx.facet_count(); ++i) facets.push_back(oracle::facet_set(n, cx.complements().row(i)));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    oracle::Set bits;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) {
        s.push_back(v);
        bits.set(v);
      }
    bool in = false;
    for (const auto& f : facets) in = in || (bits & ~f).none();
    ASSERT_EQ(is_face(cx, s), in) << mask;
  }
}

TEST(CutComplex, FVectorOfHexagon) {
  const auto cx = enumerate_facets(build_hex_graph({1, 1}), 3);
  const auto f = f_vector_exhaustive(cx);
  ASSERT_EQ(f.counts.size(), 4u);
  EXPECT_EQ(f.f(-1), 1);
  EXPECT_EQ(f.f(0), 6);
  EXPECT_EQ(f.f(1), 15);
  EXPECT_EQ(f.f(2), 14);
  EXPECT_EQ(f, f_vector_closed_form({1, 1}));
}

TEST(CutComplex, FVectorClosedFormMatchesEnumeration) {
  for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const auto cx = enumerate_facets(build_hex_graph({m, n}), 3);
    const auto f = f_vector_exhaustive(cx);
    EXPECT_EQ(f, f_vector_closed_form({m, n}));
    EXPECT_EQ(f.f(6), 106);
  }
}

TEST(CutComplex, FVectorGuard) {
  const auto cx = enumerate_facets(build_hex_graph({2, 2}), 3);
  EXPECT_THROW(f_vector_exhaustive(cx, 12), Error);
}
