#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <string>

#include "hexcut/io.hpp"

namespace hexcut::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kGuard = 3 };

/// Above this many ordered pairs `verify` and `spanning` need --force.
inline constexpr std::uint64_t kVerifyPairGuard = 500'000'000;
inline constexpr std::uint64_t kForcedSubsetLimit = 200'000'000;
inline constexpr int kForcedHomologyLimit = 24;

struct RunConfig {
  std::string subcommand;
  int m = 0;
  int n = 0;
  int k = 3;
  VerifyStrategy strategy = VerifyStrategy::Pairwise;
  int jobs = 1;
  std::string format;
  std::string out;
  bool force = false;
  bool no_relocate_t = false;

  HexParams params() const { return {m, n}; }
};

struct Output {
  int code = kPass;
  std::string body;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams:
    case ErrorKind::KOutOfRange:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::EmptySubset:
    case ErrorKind::OrdinalOutOfRange:
      return kUsage;
    case ErrorKind::ResourceGuard:
    case ErrorKind::SizeLimitExceeded:
      return kGuard;
    default:
      return kCheckFailed;
  }
}

namespace detail {

inline void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw Error(ErrorKind::InvalidParams, c.subcommand + " supports --format " + list);
}

inline void require_k3(const RunConfig& c) {
  if (c.k != 3) throw Error(ErrorKind::InvalidParams, c.subcommand + " works on the 3-cut complex only (--k 3)");
}

inline EnumerateOptions enumerate_options(const RunConfig& c) {
  EnumerateOptions e;
  e.jobs = c.jobs;
  if (c.force) e.max_subsets = kForcedSubsetLimit;
  return e;
}

inline const char* strategy_name(VerifyStrategy s) { return s == VerifyStrategy::Pairwise ? "pairwise" : "lambda-complement"; }

inline void guard_pairs(const RunConfig& c, std::size_t facets) {
  const auto est = verification_pair_estimate(facets);
  if (est > kVerifyPairGuard && !c.force)
    throw Error(ErrorKind::ResourceGuard, "about " + std::to_string(est) + " facet pairs to check; rerun with --force");
}

struct Verified {
  CutComplex cx;
  ShellingOrder order;
  ShellingVerdict verdict;
};

inline Verified run_verification(const RunConfig& c) {
  const auto g = build_hex_graph(c.params());
  auto cx = enumerate_facets(g, 3, enumerate_options(c));
  guard_pairs(c, cx.facet_count());
  auto order = c.no_relocate_t ? revlex_order(cx) : hex_shelling_order(cx);
  VerifyOptions vo;
  vo.strategy = c.strategy;
  vo.jobs = c.jobs;
  auto verdict = verify_shelling(cx, order, vo);
  return {std::move(cx), std::move(order), verdict};
}

}  // namespace detail

inline Output cmd_graph(const RunConfig& c) {
  if (c.format.empty() || c.format == "json") {
    return {kPass, dump(graph_json(build_hex_graph(c.params()), c.k))};
  }
  detail::require_format(c, {"json", "edges", "text", "dot"});
  const auto g = build_hex_graph(c.params());
  return {kPass, c.format == "dot" ? graph_dot(g) : graph_edge_list(g.graph())};
}

inline Output cmd_facets(const RunConfig& c) {
  detail::require_format(c, {"", "json", "csv"});
  const auto g = build_hex_graph(c.params());
  const auto cx = enumerate_facets(g, c.k, detail::enumerate_options(c));
  if (c.format == "csv") return {kPass, tuples_csv(cx.complements())};
  return {kPass, dump(facets_json(cx, c.params()))};
}

inline Output cmd_order(const RunConfig& c) {
  detail::require_format(c, {"", "json", "csv"});
  detail::require_k3(c);
  const auto g = build_hex_graph(c.params());
  const auto cx = enumerate_facets(g, 3, detail::enumerate_options(c));
  const auto order = c.no_relocate_t ? revlex_order(cx) : hex_shelling_order(cx);
  if (c.format == "csv") return {kPass, tuples_csv(order.facets())};
  return {kPass, dump(order_json(order, c.params()))};
}

inline Output cmd_verify(const RunConfig& c) {
  detail::require_format(c, {"", "json", "text"});
  detail::require_k3(c);
  const auto v = detail::run_verification(c);
  const int code = v.verdict.ok ? kPass : kCheckFailed;
  if (c.format == "text") {
    if (v.verdict.ok) return {code, "ok\n"};
    return {code, "counterexample i=" + std::to_string(v.verdict.counterexample->first) +
                      " j=" + std::to_string(v.verdict.counterexample->second) + "\n"};
  }
  auto j = json_header(c.params(), 3);
  j["facet_count"] = v.cx.facet_count();
  j["relocate_t"] = !c.no_relocate_t;
  j["t_tail_start"] = v.order.base_count() + 1;
  j["strategy"] = detail::strategy_name(c.strategy);
  j["pair_estimate"] = verification_pair_estimate(v.cx.facet_count());
  if (c.no_relocate_t) {
    Json pos = Json::array();
    for (const auto& t : t_facets_formula(c.params())) pos.push_back(v.order.position_of(t.complement) + 1);
    j["t_positions"] = std::move(pos);
  }
  j["verdict"] = verdict_json(v.verdict);
  return {code, dump(j)};
}

inline Output cmd_spanning(const RunConfig& c) {
  detail::require_format(c, {"", "json", "csv"});
  detail::require_k3(c);
  if (c.no_relocate_t) throw Error(ErrorKind::InvalidParams, "spanning needs the relocated order");
  const auto v = detail::run_verification(c);
  if (!v.verdict.ok) {
    auto j = json_header(c.params(), 3);
    j["verdict"] = verdict_json(v.verdict);
    return {kCheckFailed, dump(j)};
  }
  const auto report = spanning_facets(v.cx, v.order, v.verdict, false, c.jobs);
  const auto psi = psi_formula(c.m, c.n);
  const bool lemma = check_spanning_excludes_last_vertex(v.order, report);
  const auto delta = delta_formula(c.m, c.n);
  const bool count_ok = static_cast<std::int64_t>(report.non_spanning_pairs.size()) == delta;
  const int code = report.psi == psi && lemma && count_ok ? kPass : kCheckFailed;
  if (c.format == "csv") return {code, spanning_csv(report)};

  const auto table = non_spanning_pair_table(c.m, c.n);
  const auto diff = compare_pair_table(table, report);
  auto j = spanning_json(report, c.params());
  j["psi_formula"] = psi;
  j["spanning_complements_contain_N"] = lemma;
  j["non_spanning_count"] = report.non_spanning_pairs.size();
  j["delta"] = delta;
  j["pair_table"] = pair_table_json(table, diff);
  j["witnesses"] = witness_json(check_witnesses(v.order, listed_witnesses(c.m, c.n)));
  return {code, dump(j)};
}

inline Output cmd_formulas(const RunConfig& c) {
  detail::require_format(c, {"", "json", "text"});
  const auto p = c.params();
  p.validate();
  const int nv = p.vertex_count();
  const auto delta = delta_formula(c.m, c.n), eta = eta_formula(c.m, c.n), psi = psi_formula(c.m, c.n);
  const int b = beta(c.m, c.n);
  const std::string note =
      "listed non-spanning pair families total 6mn+2m+2n-4 (= delta), the value subtracted in psi; a stated total of 6mn+2m+2n-6 is inconsistent with both";
  if (c.format == "text") {
    std::ostringstream os;
    os << "N=" << nv << " d=" << nv - 4 << " delta=" << delta << " eta=" << eta << " beta=" << b << " psi=" << psi << '\n'
       << "note: " << note << '\n';
    return {kPass, os.str()};
  }
  auto j = json_header(p, 3);
  j["N"] = nv;
  j["d"] = nv - 4;
  j["edges"] = p.expected_edges();
  j["delta"] = delta;
  j["eta"] = eta;
  j["beta"] = b;
  j["psi"] = psi;
  j["pair_family_total"] = delta;
  j["footnote"] = note;
  return {kPass, dump(j)};
}

inline Output cmd_euler(const RunConfig& c) {
  detail::require_format(c, {"", "json", "text"});
  detail::require_k3(c);
  const auto chi = reduced_euler_closed_form(c.m, c.n);
  const auto psi = psi_formula(c.m, c.n);
  const int code = chi == psi ? kPass : kCheckFailed;
  if (c.format == "text") return {code, std::to_string(chi) + "\n"};
  const auto p = c.params();
  auto j = json_header(p, 3);
  j["reduced_euler"] = chi;
  j["psi"] = psi;
  j["equal"] = chi == psi;
  const int limit = c.force ? kDefaultExhaustiveLimit : kDefaultHomologyLimit;
  if (p.vertex_count() <= limit) {
    const auto cx = enumerate_facets(build_hex_graph(p), 3, detail::enumerate_options(c));
    const auto f = f_vector_exhaustive(cx, limit);
    j["f_vector_enumerated"] = f_vector_json(f);
    j["reduced_euler_enumerated"] = f.reduced_euler().str();
  } else {
    j["f_vector_enumerated"] = nullptr;
  }
  return {code, dump(j)};
}

inline Output cmd_homology(const RunConfig& c) {
  detail::require_format(c, {"", "json", "text"});
  detail::require_k3(c);
  const auto p = c.params();
  p.validate();
  const int limit = c.force ? kForcedHomologyLimit : kDefaultHomologyLimit;
  if (p.vertex_count() > limit)
    throw Error(ErrorKind::ResourceGuard, "homology over 2^" + std::to_string(p.vertex_count()) + " vertex subsets exceeds the guard" +
                                              (c.force ? "" : "; rerun with --force"));
  const auto cx = enumerate_facets(build_hex_graph(p), 3, detail::enumerate_options(c));
  const auto fc = FaceComplex::from_cut_complex(cx, limit);
  const auto betti = betti_numbers(fc);
  WedgeOptions wo;
  wo.jobs = c.jobs;
  wo.homology_limit = 0;  // Betti numbers already computed above
  auto verdict = wedge_claim_check(c.m, c.n, wo);
  bool concentrated = true;
  for (int q = -1; q <= fc.dimension(); ++q) concentrated = concentrated && betti.at(q) == (q == verdict.dimension ? verdict.psi : 0);
  verdict.betti = concentrated;
  const int code = verdict.ok() ? kPass : kCheckFailed;
  if (c.format == "text") {
    std::ostringstream os;
    for (int q = -1; q <= fc.dimension(); ++q) os << "b~_" << q << " = " << betti.at(q) << '\n';
    return {code, os.str()};
  }
  auto j = wedge_json(verdict);
  j["betti_reduced"] = betti.values;
  j["betti_first_dimension"] = -1;
  j["f_vector"] = f_vector_json(fc.f_vector());
  return {code, dump(j)};
}

inline Output cmd_explore(const RunConfig& c) {
  detail::require_format(c, {"", "json"});
  const auto g = build_hex_graph(c.params());
  auto j = json_header(c.params(), c.k);
  Json results = Json::array();
  ExploreOptions eo;
  eo.jobs = c.jobs;
  eo.force = c.force;
  eo.max_pairs = kVerifyPairGuard;
  for (auto rule : {OrderingRule::Revlex, OrderingRule::RevlexWithNeighborhoodTail}) {
    const auto r = generic_k_order_check(g.graph(), c.k, rule, c.params(), eo);
    Json e;
    e["rule"] = rule == OrderingRule::Revlex ? "lex" : "lex_with_neighborhood_tail";
    e["facet_count"] = r.facet_count;
    e["tail_count"] = r.tail_count;
    e["verdict"] = verdict_json(r.verdict);
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  return {kPass, dump(j)};
}

inline Output dispatch(const RunConfig& c) {
  if (c.subcommand == "graph") return cmd_graph(c);
  if (c.subcommand == "facets") return cmd_facets(c);
  if (c.subcommand == "order") return cmd_order(c);
  if (c.subcommand == "verify") return cmd_verify(c);
  if (c.subcommand == "spanning") return cmd_spanning(c);
  if (c.subcommand == "formulas") return cmd_formulas(c);
  if (c.subcommand == "euler") return cmd_euler(c);
  if (c.subcommand == "homology") return cmd_homology(c);
  if (c.subcommand == "explore") return cmd_explore(c);
  throw Error(ErrorKind::InvalidParams, "unknown subcommand " + c.subcommand);
}

/// Parses argv, runs one subcommand and writes its output to --out or `out`.
/// Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hexcut: cut complexes of hexagonal grid graphs"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  RunConfig c;
  c.jobs = default_jobs();
  std::string strategy = "pairwise";
  app.add_option("--m", c.m, "columns of hexagons")->required();
  app.add_option("--n", c.n, "rows of hexagons")->required();
  app.add_option("--k", c.k, "cut size (default 3)");
  app.add_option("--strategy", strategy, "pairwise or lambda-complement")->check(CLI::IsMember({"pairwise", "lambda-complement"}));
  app.add_option("--jobs", c.jobs, "worker threads (default $HEXCUT_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "json, csv, dot, edges or text");
  app.add_option("--out", c.out, "write output to this file");
  app.add_flag("--force", c.force, "lift resource guards");
  app.add_flag("--no-relocate-t", c.no_relocate_t, "keep T facets at their lexicographic slots");

  const std::pair<const char*, const char*> subs[] = {
      {"graph", "export H_{1 x m x n} after validating its structure"},
      {"facets", "enumerate facet complements of the k-cut complex"},
      {"order", "export the shelling order"},
      {"verify", "verify the shelling order"},
      {"spanning", "count spanning facets and compare with the pair tables"},
      {"formulas", "closed forms N, d, delta, eta, beta, psi"},
      {"euler", "reduced Euler characteristic"},
      {"homology", "GF(2) reduced Betti numbers"},
      {"explore", "run the shelling check for general k"},
  };
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.strategy = strategy == "pairwise" ? VerifyStrategy::Pairwise : VerifyStrategy::LambdaComplement;

  Output o;
  try {
    if (c.k < 1) throw Error(ErrorKind::KOutOfRange, "k must be positive");
    c.params().validate();
    o = dispatch(c);
  } catch (const Error& e) {
    err << "hexcut: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "hexcut: out of memory\n";
    return kGuard;
  }

  if (c.out.empty()) {
    out << o.body;
  } else {
    std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "hexcut: cannot open " << c.out << '\n';
      return kUsage;
    }
    f << o.body;
  }
  return o.code;
}

}  // namespace hexcut::cli
