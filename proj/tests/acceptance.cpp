// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hexcut/cli.hpp"

using namespace hexcut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

const std::vector<std::pair<int, int>> kShellGrid{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2},
                                                 {3, 3}, {1, 4}, {1, 5}, {1, 6}, {4, 1}};

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

struct GridRun {
  int m, n;
  CutComplex cx;
  ShellingOrder order;
  ShellingVerdict verdict;
  double verify_seconds;
};

std::vector<GridRun> shell_grid() {
  std::vector<GridRun> out;
  for (auto [m, n] : kShellGrid) {
    auto cx = enumerate_facets(build_hex_graph({m, n}), 3);
    auto order = hex_shelling_order(cx);
    const auto t0 = Clock::now();
    auto v = verify_shelling(cx, order);
    out.push_back({m, n, std::move(cx), std::move(order), v, seconds_since(t0)});
  }
  return out;
}

Criterion c1_graph() {
  Criterion c{1, "graph structure for 1<=m,n<=6"};
  const auto t0 = Clock::now();
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto g = build_hex_graph({m, n});
      const auto r = validate_structure(g);
      c.require(r.ok(), "validate_structure " + mn(m, n));
      int d2 = 0, d3 = 0;
      for (Vertex v = 1; v <= g.vertex_count(); ++v) (g.graph().degree(v) == 2 ? d2 : d3)++;
      c.require(d2 == 2 * m + 2 * n + 2 && d3 == 2 * m * n - 2, "degree counts " + mn(m, n));
      c.require(static_cast<int>(g.graph().edge_count()) == 3 * m * n + 2 * m + 2 * n - 1, "edge count " + mn(m, n));
      c.require(g.graph().girth() == 6, "girth " + mn(m, n));
    }
  const double s = seconds_since(t0);
  c.require(s < 1.0, "runtime " + fmt(s) + " >= 1s");
  const auto g = build_hex_graph({4, 6});
  c.require(g.adjacent(11, 47) && g.adjacent(17, 47) && g.adjacent(17, 52), "worked adjacencies at (4,6)");
  c.note("36 instances in " + fmt(s));
  return c;
}

Criterion c2_counts() {
  Criterion c{2, "delta and eta: enumeration equals formulas"};
  std::vector<std::pair<int, int>> grid{{1, 5}, {1, 6}, {5, 1}, {6, 1}};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) grid.emplace_back(m, n);
  for (auto [m, n] : grid) {
    const auto g = build_hex_graph({m, n});
    c.require(static_cast<std::int64_t>(induced_p3_list(g).size()) == delta_formula(m, n), "delta " + mn(m, n));
    c.require(static_cast<std::int64_t>(enumerate_facets(g, 3).facet_count()) == eta_formula(m, n), "eta " + mn(m, n));
  }
  c.require(delta_formula(4, 6) == 160, "delta(4,6) = 160");
  c.require(eta_formula(4, 6) == 49956, "eta(4,6) = 49956");
  const auto t0 = Clock::now();
  const auto g = build_hex_graph({4, 6});
  const auto cx = enumerate_facets(g, 3);
  const double s = seconds_since(t0);
  c.require(cx.facet_count() == 49956u && induced_p3_list(g).size() == 160u, "enumeration at (4,6)");
  c.require(s < 60.0, "(4,6) enumeration " + fmt(s));
  c.note(std::to_string(grid.size()) + " instances; (4,6) enumerated in " + fmt(s));
  return c;
}

Criterion c3_shelling(const std::vector<GridRun>& grid, const ShellingVerdict& stress, double stress_s) {
  Criterion c{3, "shelling order verifies"};
  double worst = 0;
  for (const auto& r : grid) {
    c.require(r.verdict.ok, "verify " + mn(r.m, r.n));
    c.require(r.verify_seconds < 10.0, "time " + mn(r.m, r.n));
    worst = std::max(worst, r.verify_seconds);
  }
  c.require(stress.ok, "stress (4,6)");
  c.require(stress_s < 600.0, "stress time " + fmt(stress_s));
  c.note(std::to_string(grid.size()) + " instances, slowest " + fmt(worst) + "; (4,6) with 8 workers in " + fmt(stress_s));
  return c;
}

Criterion c4_relocation(const std::vector<GridRun>& grid) {
  Criterion c{4, "T facets cannot stay at their lexicographic slot"};
  int cases = 0;
  for (const auto& r : grid) {
    const int b = beta(r.m, r.n);
    if (b == 0) continue;
    for (int i = 1; i <= b; ++i) {
      const auto [order, pos] = reinsert_t_facet(r.cx, i);
      const auto v = verify_shelling(r.cx, order);
      c.require(!v.ok && v.counterexample->second == pos, "reinsert T_" + std::to_string(i) + " at " + mn(r.m, r.n));
      ++cases;
    }
    c.require(verify_t_facet_obstruction(r.cx), "obstruction witness " + mn(r.m, r.n));
  }
  c.note(std::to_string(cases) + " reinsertions");
  return c;
}

Criterion c5_psi(const std::vector<GridRun>& grid, const std::vector<SpanningReport>& reports, std::int64_t stress_psi) {
  Criterion c{5, "spanning facet count equals psi"};
  for (std::size_t i = 0; i < grid.size(); ++i)
    c.require(reports[i].psi == psi_formula(grid[i].m, grid[i].n), "psi " + mn(grid[i].m, grid[i].n));
  c.require(psi_formula(1, 1) == 4 && psi_formula(1, 2) == 22 && psi_formula(2, 2) == 77, "psi(1,1), psi(1,2), psi(2,2)");
  c.require(psi_formula(4, 6) == 2051 && stress_psi == 2051, "psi(4,6) = 2051 (computed " + std::to_string(stress_psi) + ")");
  return c;
}

Criterion c6_last_vertex(const std::vector<GridRun>& grid, const std::vector<SpanningReport>& reports) {
  Criterion c{6, "spanning complements contain N; T facets never span"};
  int exceptions = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& order = grid[i].order;
    const Vertex n = order.vertex_count();
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (!reports[i].spanning[j]) continue;
      const auto f = order.at(j);
      if (order.in_tail(j) || std::find(f.begin(), f.end(), n) == f.end()) ++exceptions;
    }
    c.require(check_spanning_excludes_last_vertex(order, reports[i]), "check " + mn(grid[i].m, grid[i].n));
  }
  c.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
  c.note("0 exceptions required, " + std::to_string(exceptions) + " found");
  return c;
}

Criterion c7_pair_table(const std::vector<GridRun>& grid, const std::vector<SpanningReport>& reports) {
  Criterion c{7, "non-spanning pair table"};
  int well = 0, malformed = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int m = grid[i].m, n = grid[i].n;
    const Vertex nv = grid[i].cx.vertex_count();
    const auto& r = reports[i];
    // The computed set must account for exactly the pairs psi leaves out.
    const auto expected = static_cast<std::int64_t>(binomial(nv - 1, 2)) - psi_formula(m, n);
    c.require(static_cast<std::int64_t>(r.non_spanning_pairs.size()) == expected, "computed pairs " + mn(m, n));
    const auto table = non_spanning_pair_table(m, n);
    const auto diff = compare_pair_table(table, r);
    if (table.well_formed()) {
      ++well;
      c.require(diff.equal(), "set equality " + mn(m, n));
    } else {
      ++malformed;
      std::ostringstream os;
      os << "diff " << mn(m, n) << ":";
      for (const auto& t : table.malformed) os << " malformed family " << t.family << " (" << t.x << "," << t.y << ")";
      for (const auto& [x, y] : diff.missing_from_table) os << " missing (" << x << "," << y << ")";
      for (const auto& [x, y] : diff.extra_in_table) os << " extra (" << x << "," << y << ")";
      c.note(os.str());
    }
  }
  c.note(std::to_string(well) + " well-formed instances with set equality, " + std::to_string(malformed) + " with a listed diff");
  return c;
}

Criterion c8_euler() {
  Criterion c{8, "Euler characteristic equals psi"};
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 10; ++n) c.require(reduced_euler_closed_form(m, n) == psi_formula(m, n), "closed form " + mn(m, n));
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    const auto cx = enumerate_facets(build_hex_graph({m, n}), 3);
    c.require(reduced_euler(cx) == reduced_euler_closed_form(m, n), "enumerated " + mn(m, n));
  }
  return c;
}

Criterion c9_homology() {
  Criterion c{9, "GF(2) Betti numbers concentrated in degree N-4"};
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    const auto t0 = Clock::now();
    const auto cx = enumerate_facets(build_hex_graph({m, n}), 3);
    const auto b = betti_numbers(cx);
    const double s = seconds_since(t0);
    const int d = cx.vertex_count() - 4;
    bool ok = true;
    for (int p = -1; p <= cx.dimension(); ++p) ok = ok && b.at(p) == (p == d ? psi_formula(m, n) : 0);
    c.require(ok, "betti " + mn(m, n));
    c.require(s < 60.0, "time " + mn(m, n));
    c.note(mn(m, n) + ": b~_" + std::to_string(d) + " = " + std::to_string(b.at(d)) + " in " + fmt(s));
  }
  return c;
}

Criterion c10_determinism() {
  Criterion c{10, "repeated runs give byte-identical files"};
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "hexcut_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> runs{
      {"graph", "--format", "json"}, {"graph", "--format", "edges"}, {"graph", "--format", "dot"},
      {"facets"},                    {"facets", "--format", "csv"},  {"facets", "--k", "4"},
      {"order"},                     {"verify"},                     {"verify", "--no-relocate-t"},
      {"spanning"},                  {"spanning", "--format", "csv"}, {"formulas"},
      {"euler"},                     {"homology"},                   {"explore", "--k", "4"}};
  int compared = 0;
  for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}}) {
    for (const auto& args : runs) {
      std::string contents[2];
      for (int rep = 0; rep < 2; ++rep) {
        const auto path = dir / ("run" + std::to_string(rep) + ".out");
        std::vector<std::string> full{"hexcut"};
        full.insert(full.end(), args.begin(), args.end());
        full.insert(full.end(), {"--m", std::to_string(m), "--n", std::to_string(n), "--jobs", rep == 0 ? "1" : "4", "--out", path.string()});
        std::vector<const char*> argv;
        for (const auto& s : full) argv.push_back(s.c_str());
        std::ostringstream out, err;
        cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        std::ifstream f(path, std::ios::binary);
        contents[rep].assign(std::istreambuf_iterator<char>(f), {});
      }
      c.require(!contents[0].empty() && contents[0] == contents[1], args.front() + " " + mn(m, n));
      ++compared;
    }
  }
  fs::remove_all(dir);
  c.note(std::to_string(compared) + " output files compared across worker counts");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto record = [&](Criterion c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << '\n';
    for (const auto& n : c.notes) std::cout << "        " << n << '\n';
    std::cout.flush();
    results.push_back(std::move(c));
  };
  try {
    record(c1_graph());
    record(c2_counts());

    const auto grid = shell_grid();
    const auto stress_cx = enumerate_facets(build_hex_graph({4, 6}), 3, EnumerateOptions{8});
    const auto stress_order = hex_shelling_order(stress_cx);
    const auto t0 = Clock::now();
    const auto stress = verify_shelling(stress_cx, stress_order, VerifyOptions{VerifyStrategy::Pairwise, 8});
    const double stress_s = seconds_since(t0);
    record(c3_shelling(grid, stress, stress_s));
    record(c4_relocation(grid));

    std::vector<SpanningReport> reports;
    for (const auto& r : grid) reports.push_back(spanning_facets(r.cx, r.order, r.verdict));
    const std::int64_t stress_psi = stress.ok ? spanning_facets(stress_cx, stress_order, stress, false, 8).psi : -1;
    record(c5_psi(grid, reports, stress_psi));
    record(c6_last_vertex(grid, reports));
    record(c7_pair_table(grid, reports));
    record(c8_euler());
    record(c9_homology());
    record(c10_determinism());
  } catch (const std::exception& e) {
    std::cout << "FAIL  aborted: " << e.what() << '\n';
    return 1;
  }
  int failed = 0;
  for (const auto& c : results) failed += !c.ok;
  std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
