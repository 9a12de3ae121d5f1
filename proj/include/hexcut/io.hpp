#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "hexcut/homology.hpp"
#include "hexcut/shelling.hpp"
#include "hexcut/spanning.hpp"

namespace hexcut {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Common header carried by every JSON document.
inline Json json_header(const HexParams& p, int k) {
  Json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["k"] = k;
  j["tool_version"] = kToolVersion;
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json tuples_json(const TupleList& t) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) a.push_back(t.row(i));
  return a;
}

inline std::string tuples_csv(const TupleList& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto r = t[i];
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
    os << '\n';
  }
  return os.str();
}

// Graph -----------------------------------------------------------------------

inline std::string graph_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline std::string graph_dot(const HexGraph& g) {
  std::ostringstream os;
  os << "graph H_1x" << g.params().m << 'x' << g.params().n << " {\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) os << "  " << v << (g.in_v1(v) ? " [shape=circle];\n" : " [shape=box];\n");
  for (const auto& e : g.graph().edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline Json graph_json(const HexGraph& g, int k) {
  auto j = json_header(g.params(), k);
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& e : g.graph().edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

inline Json validation_json(const ValidationReport& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

// Facets and orders -----------------------------------------------------------

inline Json facets_json(const CutComplex& cx, const HexParams& p) {
  auto j = json_header(p, cx.k());
  j["n_vertices"] = cx.vertex_count();
  j["facet_count"] = cx.facet_count();
  j["facet_complements"] = tuples_json(cx.complements());
  return j;
}

inline Json order_json(const ShellingOrder& order, const HexParams& p) {
  auto j = json_header(p, order.k());
  j["order"] = tuples_json(order.facets());
  j["t_tail_start"] = order.base_count() + 1;
  return j;
}

inline Json verdict_json(const ShellingVerdict& v) {
  Json j;
  j["ok"] = v.ok;
  if (v.counterexample) j["counterexample"] = {{"i", v.counterexample->first}, {"j", v.counterexample->second}};
  else j["counterexample"] = nullptr;
  return j;
}

// Spanning report ---------------------------------------------------------------

inline Json pairs_json(const std::vector<VertexPair>& ps) {
  Json a = Json::array();
  for (const auto& [x, y] : ps) a.push_back({x, y});
  return a;
}

inline Json spanning_json(const SpanningReport& r, const HexParams& p) {
  auto j = json_header(p, 3);
  j["psi"] = r.psi;
  Json sc = Json::array();
  for (const auto& c : r.spanning_complements) sc.push_back(c);
  j["spanning_complements"] = std::move(sc);
  j["non_spanning_pairs"] = pairs_json(r.non_spanning_pairs);
  return j;
}

inline Json pair_table_json(const PairTable& t, const PairDiff& d) {
  Json j;
  j["well_formed"] = t.well_formed();
  j["family_counts"] = t.raw_counts;
  j["raw_total"] = t.raw_total();
  Json bad = Json::array();
  for (const auto& q : t.malformed) bad.push_back({{"family", q.family}, {"pair", {q.x, q.y}}});
  j["malformed"] = std::move(bad);
  Json diff;
  diff["equal"] = d.equal();
  diff["missing_from_table"] = pairs_json(d.missing_from_table);
  diff["extra_in_table"] = pairs_json(d.extra_in_table);
  j["diff"] = std::move(diff);
  return j;
}

inline Json witness_json(const std::vector<WitnessCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["type"] = c.entry.type;
    e["pair"] = {c.entry.x, c.entry.y};
    e["listed_lambdas"] = c.entry.lambdas;
    e["status"] = to_string(c.status);
    if (c.used_lambda) e["used_lambda"] = *c.used_lambda;
    if (c.computed_lambda) e["computed_lambda"] = *c.computed_lambda;
    Json trace = Json::array();
    for (const auto& s : c.trace) trace.push_back({{"alpha", s.alpha}, {"complement", s.complement}, {"obstruction", to_string(s.obstruction)}});
    e["trace"] = std::move(trace);
    a.push_back(std::move(e));
  }
  return a;
}

inline std::string spanning_csv(const SpanningReport& r) {
  std::ostringstream os;
  os << "kind,a,b,c\n";
  for (const auto& c : r.spanning_complements) os << "spanning," << c[0] << ',' << c[1] << ',' << c[2] << '\n';
  for (const auto& [x, y] : r.non_spanning_pairs) os << "non_spanning_pair," << x << ',' << y << ",\n";
  return os.str();
}

// Homotopy checks ---------------------------------------------------------------

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline Json wedge_json(const WedgeVerdict& v) {
  auto j = json_header(v.params, 3);
  j["checks"] = {{"shelling", optional_bool(v.shelling)},
                 {"spanning_eq_psi", optional_bool(v.spanning_eq_psi)},
                 {"euler_eq_psi", optional_bool(v.euler_eq_psi)},
                 {"betti", optional_bool(v.betti)}};
  j["psi"] = v.psi;
  j["dimension"] = v.dimension;
  return j;
}

inline Json f_vector_json(const FVector& f) {
  Json a = Json::array();
  for (const auto& c : f.counts) a.push_back(c.str());
  return a;
}

}  // namespace hexcut
