#pragma once

#include <string>
#include <vector>

#include "hexcut/graph.hpp"

namespace hexcut {

/// Shape of the hexagonal grid: m hexagon columns by n hexagon rows.
struct HexParams {
  int m = 1;
  int n = 1;

  void validate() const {
    if (m < 1 || n < 1)
      throw Error(ErrorKind::InvalidParams, "need m >= 1 and n >= 1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }

  /// |V| = 2m + 2n + 2mn.
  int vertex_count() const { return 2 * m + 2 * n + 2 * m * n; }
  /// Largest label of the first colour class, m + n + mn.
  int v1_boundary() const { return m + n + m * n; }
  int expected_edges() const { return 3 * m * n + 2 * m + 2 * n - 1; }

  friend bool operator==(const HexParams&, const HexParams&) = default;
};

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<StructureCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const StructureCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// An induced path a - b - c with midpoint b and endpoints a < c.
struct InducedP3 {
  Vertex a;
  Vertex b;
  Vertex c;
  friend auto operator<=>(const InducedP3&, const InducedP3&) = default;
};

/// H_{1 x m x n} with its fixed 1-based labelling.
///
/// Labelling, with A = m + n + mn. The first colour class V1 = [1, A] is laid
/// out as a top row 1..m followed by n rows of m + 1 labels; row r >= 1 holds
/// r(m+1) .. r(m+1)+m. V2 = [A+1, 2A] mirrors it: n rows of m + 1 labels
/// (row r starts at A + (r-1)(m+1) + 1) and a bottom row of m. Edges come in
/// four label-offset families:
///
///   E1  i ~ i + A      for i in [1, m] and [n+nm+1, A]       (top/bottom rows)
///   E2  i ~ i + n+nm   for i in [m+1, A]                     (same row)
///   E3  i ~ i + A + 1  for i in [1, A-1]                      (next row, same slot)
///   E4  i ~ i + A + 2  for i in [m+1, n+nm-2], i mod (m+1) != m  (next row, next slot)
class HexGraph {
 public:
  /// Wraps an already-built graph without validating it. Use build_hex_graph
  /// for checked construction.
  HexGraph(HexParams params, Graph graph) : params_(params), graph_(std::move(graph)) {}

  const HexParams& params() const { return params_; }
  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int v1_boundary() const { return params_.v1_boundary(); }
  bool in_v1(Vertex v) const { return v >= 1 && v <= v1_boundary(); }
  bool in_v2(Vertex v) const { return v > v1_boundary() && v <= vertex_count(); }

  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  bool is_connected_subset(std::span<const Vertex> s) const { return graph_.is_connected_subset(s); }

 private:
  HexParams params_;
  Graph graph_;
};

/// Edge list of H_{1 x m x n}, before any validation.
inline std::vector<Edge> hex_edges(const HexParams& p) {
  p.validate();
  const int m = p.m, n = p.n, a = p.v1_boundary();
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(p.expected_edges()));
  for (int i = 1; i <= m; ++i) e.push_back({i, i + a});
  for (int i = n + n * m + 1; i <= a; ++i) e.push_back({i, i + a});
  for (int i = m + 1; i <= a; ++i) e.push_back({i, i + n + n * m});
  for (int i = 1; i <= a - 1; ++i) e.push_back({i, i + a + 1});
  for (int i = m + 1; i <= n + n * m - 2; ++i)
    if (i % (m + 1) != m) e.push_back({i, i + a + 2});
  return e;
}

inline ValidationReport validate_structure(const HexGraph& g);

/// Builds and validates H_{1 x m x n}. Throws ConstructionInvariantViolated
/// if any structural check fails.
inline HexGraph build_hex_graph(const HexParams& p) {
  p.validate();
  HexGraph g(p, Graph(p.vertex_count(), hex_edges(p)));
  const auto report = validate_structure(g);
  for (const auto& c : report.checks)
    if (!c.passed) throw Error(ErrorKind::ConstructionInvariantViolated, c.name + ": " + c.detail);
  return g;
}

/// Every connected 3-subset, once, as (endpoint, midpoint, endpoint), sorted.
inline std::vector<InducedP3> induced_p3_list(const Graph& g) {
  std::vector<InducedP3> out;
  for (Vertex b = 1; b <= g.vertex_count(); ++b) {
    const auto nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) out.push_back({nb[i], b, nb[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<InducedP3> induced_p3_list(const HexGraph& g) { return induced_p3_list(g.graph()); }

inline ValidationReport validate_structure(const HexGraph& hg) {
  const auto& p = hg.params();
  const auto& g = hg.graph();
  const int n_vertices = p.vertex_count();
  const int split = p.v1_boundary();
  ValidationReport r;
  auto add = [&](std::string name, bool ok, std::string detail) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };

  add("vertex_count", g.vertex_count() == n_vertices,
      "expected " + std::to_string(n_vertices) + ", got " + std::to_string(g.vertex_count()));
  if (g.vertex_count() != n_vertices) return r;

  add("edge_count", static_cast<int>(g.edge_count()) == p.expected_edges(),
      "expected " + std::to_string(p.expected_edges()) + ", got " + std::to_string(g.edge_count()));

  int deg2 = 0, deg3 = 0, other = 0;
  for (Vertex v = 1; v <= n_vertices; ++v) {
    const int d = g.degree(v);
    (d == 2 ? deg2 : d == 3 ? deg3 : other)++;
  }
  const int want3 = 2 * p.m * p.n - 2, want2 = 2 * p.m + 2 * p.n + 2;
  add("degree_sequence", deg2 == want2 && deg3 == want3 && other == 0,
      "degree 2: " + std::to_string(deg2) + "/" + std::to_string(want2) + ", degree 3: " + std::to_string(deg3) + "/" +
          std::to_string(want3) + ", other: " + std::to_string(other));

  bool bip = true;
  for (const auto& e : g.edges()) bip = bip && ((e.u <= split) != (e.v <= split));
  add("bipartite_split", bip, "every edge joins [1, " + std::to_string(split) + "] to the rest");

  bool nbhd = true;
  for (Vertex v = 1; v <= n_vertices; ++v)
    for (Vertex u : g.neighbors(v)) nbhd = nbhd && ((v <= split) != (u <= split));
  add("neighborhood_split", nbhd, "N(v) lies in the opposite colour class");

  const int girth = g.girth();
  add("girth", girth == 6, "girth " + std::to_string(girth));

  add("connected", g.connected(), "");

  const int faces = static_cast<int>(g.edge_count()) - n_vertices + 1;
  add("face_count", faces == p.m * p.n, std::to_string(faces) + " bounded faces");
  return r;
}

}  // namespace hexcut
