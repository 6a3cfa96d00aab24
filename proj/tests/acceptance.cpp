// Acceptance suite: one pass/fail line per criterion, exact expectations and
// pinned runtime budgets. Exits nonzero if any criterion fails. argv[1] must
// point at the bdom CLI binary (used by the determinism criterion).
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bdom/broadcast.hpp"
#include "bdom/constructions.hpp"
#include "bdom/families.hpp"
#include "bdom/formulas.hpp"
#include "bdom/graph.hpp"
#include "bdom/solver.hpp"
#include "support/random_graphs.hpp"
#include "support/subprocess.hpp"

namespace {

using bdom::Cycle;
using bdom::Graph;
using bdom::Path;
using bdom::Sunlet;
using bdom::SunletDeg;

std::string g_cli;
std::filesystem::path g_dir;

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int ceil_div3(int n) { return (n + 2) / 3; }

// Graphs swept by the value criteria; reused by the property criteria.
struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> value_criteria_graphs() {
  std::vector<NamedGraph> graphs;
  for (int n = 3; n <= 12; ++n) {
    graphs.push_back({bdom::family_label(Cycle{n}), bdom::generate(Cycle{n})});
  }
  for (int n = 1; n <= 12; ++n) {
    graphs.push_back({bdom::family_label(Path{n}), bdom::generate(Path{n})});
  }
  for (int n = 3; n <= 6; ++n) {
    graphs.push_back(
        {bdom::family_label(Sunlet{n}), bdom::generate(Sunlet{n})});
  }
  for (int m = 3; m <= 5; ++m) {
    for (int n = 1; n <= 3; ++n) {
      graphs.push_back({bdom::family_label(SunletDeg{m, n}),
                        bdom::generate(SunletDeg{m, n})});
    }
  }
  graphs.push_back(
      {bdom::family_label(SunletDeg{6, 3}), bdom::generate(SunletDeg{6, 3})});
  return graphs;
}

// 1. gamma_b(C_n) = ceil(n/3) for n in [3,12], by solver and by pattern.
Outcome criterion_cycles() {
  Outcome out;
  for (int n = 3; n <= 12; ++n) {
    const Graph g = bdom::generate(Cycle{n});
    const int expected = ceil_div3(n);
    const auto solved = bdom::solve_exact(g);
    out.expect(solved.gamma_b == expected,
               "solver C_" + std::to_string(n) + " = " +
                   std::to_string(solved.gamma_b) + ", expected " +
                   std::to_string(expected));
    const auto pattern = bdom::construct_cycle(n);
    out.expect(pattern.cost() == expected,
               "pattern cost C_" + std::to_string(n));
    out.expect(bdom::coverage(g, pattern).is_dominating,
               "pattern domination C_" + std::to_string(n));
  }
  return out;
}

// 2. gamma_b(P_n) = ceil(n/3) for n in [1,12]; the standard pattern
//    dominates at that cost.
Outcome criterion_paths() {
  Outcome out;
  for (int n = 1; n <= 12; ++n) {
    const Graph g = bdom::generate(Path{n});
    const int expected = ceil_div3(n);
    out.expect(bdom::solve_exact(g).gamma_b == expected,
               "solver P_" + std::to_string(n));
    const auto pattern = bdom::construct_path_standard(n);
    out.expect(pattern.cost() == expected,
               "pattern cost P_" + std::to_string(n));
    out.expect(bdom::coverage(g, pattern).is_dominating,
               "pattern domination P_" + std::to_string(n));
  }
  return out;
}

// 3. gamma_b(S_n) = ceil((n+1)/2) for n in [3,6].
Outcome criterion_sunlets() {
  Outcome out;
  for (int n = 3; n <= 6; ++n) {
    const int expected = (n + 2) / 2;
    out.expect(bdom::solve_exact(bdom::generate(Sunlet{n})).gamma_b == expected,
               "solver S_" + std::to_string(n));
  }
  return out;
}

// 4. gamma_b(S_m^n) = n + floor(m/2) for m in [3,5] x n in [1,3], plus the
//    24-vertex stretch instance m=6, n=3.
Outcome criterion_sunlet_deg() {
  Outcome out;
  auto check_one = [&out](int m, int n) {
    const int expected = n + m / 2;
    const auto solved = bdom::solve_exact(bdom::generate(SunletDeg{m, n}));
    out.expect(solved.gamma_b == expected,
               "solver sunlet-deg m=" + std::to_string(m) +
                   " n=" + std::to_string(n) + " = " +
                   std::to_string(solved.gamma_b) + ", expected " +
                   std::to_string(expected));
  };
  for (int m = 3; m <= 5; ++m) {
    for (int n = 1; n <= 3; ++n) check_one(m, n);
  }
  check_one(6, 3);
  return out;
}

// 5. radius(S_m^n) = floor(m/2) + n for m in [3,8] x n in [1,4], and every
//    center vertex is a base vertex.
Outcome criterion_radius() {
  Outcome out;
  for (int m = 3; m <= 8; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const Graph g = bdom::generate(SunletDeg{m, n});
      const auto profile = bdom::metrics(g);
      out.expect(profile.radius == m / 2 + n,
                 "radius sunlet-deg m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
      bool centers_are_bases = true;
      for (int v : profile.center) {
        if (g.role(v) != bdom::Role::Base) centers_are_bases = false;
      }
      out.expect(centers_are_bases,
                 "non-base center in sunlet-deg m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
    }
  }
  return out;
}

// 6. The efficient-restricted optimum equals the unrestricted optimum on
//    every swept graph plus 20 seeded random connected graphs (<= 10
//    vertices).
Outcome criterion_efficient() {
  Outcome out;
  auto check = [&out](const std::string& name, const Graph& g) {
    const int plain = bdom::solve_exact(g).gamma_b;
    const auto efficient = bdom::solve_exact_efficient(g);
    out.expect(efficient.gamma_b == plain, "efficient optimum differs on " + name);
    out.expect(bdom::coverage(g, efficient.witness).is_efficient,
               "witness not efficient on " + name);
  };
  for (const auto& [name, graph] : value_criteria_graphs()) check(name, graph);
  int i = 0;
  for (const auto& g : testsupport::seeded_random_graphs(20)) {
    check("random#" + std::to_string(i++), g);
  }
  return out;
}

// 7. gamma_b <= radius on every test graph with at least two vertices; the
//    single-vertex path, whose radius is 0, satisfies the adjusted bound
//    gamma_b = max(1, radius). Adding any edge to a seeded graph never
//    raises gamma_b.
Outcome criterion_bounds() {
  Outcome out;
  auto check_radius_bound = [&out](const std::string& name, const Graph& g) {
    const int gamma = bdom::solve_exact(g).gamma_b;
    const int radius = bdom::metrics(g).radius;
    if (g.vertex_count() >= 2) {
      out.expect(gamma <= radius, "gamma_b > radius on " + name);
    } else {
      out.expect(gamma == 1 && radius == 0,
                 "single-vertex bound violated on " + name);
    }
  };
  const auto graphs = value_criteria_graphs();
  for (const auto& [name, graph] : graphs) check_radius_bound(name, graph);

  const auto seeded = testsupport::seeded_random_graphs(20);
  int i = 0;
  for (const auto& g : seeded) {
    check_radius_bound("random#" + std::to_string(i++), g);
  }

  // edge monotonicity over every non-adjacent pair of the seeded graphs
  i = 0;
  for (const auto& g : seeded) {
    const int base = bdom::solve_exact(g).gamma_b;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        auto edges = g.edges();
        edges.emplace_back(u, v);
        const int extended = bdom::solve_exact(Graph(n, edges)).gamma_b;
        out.expect(extended <= base,
                   "adding edge (" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + ") to random#" +
                       std::to_string(i) + " raised gamma_b");
      }
    }
    ++i;
  }
  return out;
}

// 8. The standard path pattern for n in [1,50]: cost ceil(n/3) and at most
//    one position of overspill past each end.
Outcome criterion_overspill() {
  Outcome out;
  for (int n = 1; n <= 50; ++n) {
    const auto pattern = bdom::construct_path_standard(n);
    out.expect(pattern.cost() == ceil_div3(n),
               "pattern cost P_" + std::to_string(n));
    const auto& entries = pattern.entries();
    const auto& first = entries.front();
    const auto& last = entries.back();
    const int left = first.strength - first.vertex;
    const int right = last.strength - (n - 1 - last.vertex);
    out.expect(left <= 1, "left overspill " + std::to_string(left) + " on P_" +
                              std::to_string(n));
    out.expect(right <= 1, "right overspill " + std::to_string(right) +
                               " on P_" + std::to_string(n));
  }
  return out;
}

// 9. The solve subcommand emits byte-identical JSON witnesses with
//    --threads 1 and --threads 4 on the sunlet-deg sweep instances.
Outcome criterion_determinism() {
  Outcome out;
  if (g_cli.empty()) {
    out.expect(false, "CLI path missing (pass it as argv[1])");
    return out;
  }
  auto check_one = [&out](int m, int n) {
    const std::string tag =
        "m" + std::to_string(m) + "n" + std::to_string(n);
    const std::string file = (g_dir / (tag + ".graph.json")).string();
    const auto gen = testsupport::run_command(
        testsupport::shell_quote(g_cli) + " gen --family sunlet-deg --m " +
        std::to_string(m) + " --n " + std::to_string(n) + " --out " +
        testsupport::shell_quote(file) + " 2>/dev/null");
    out.expect(gen.exit_code == 0, "gen failed for " + tag);
    const auto one = testsupport::run_command(testsupport::shell_quote(g_cli) +
                                              " solve " +
                                              testsupport::shell_quote(file) +
                                              " --threads 1 --json 2>/dev/null");
    const auto four = testsupport::run_command(testsupport::shell_quote(g_cli) +
                                               " solve " +
                                               testsupport::shell_quote(file) +
                                               " --threads 4 --json 2>/dev/null");
    out.expect(one.exit_code == 0 && four.exit_code == 0,
               "solve failed for " + tag);
    out.expect(!one.output.empty(), "empty solve output for " + tag);
    out.expect(one.output == four.output,
               "thread-count-dependent output for " + tag);
  };
  for (int m = 3; m <= 5; ++m) {
    for (int n = 1; n <= 3; ++n) check_one(m, n);
  }
  check_one(6, 3);
  return out;
}

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;  // <= 0 means no budget
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  g_dir = std::filesystem::temp_directory_path() /
          ("bdom-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(g_dir);

  const std::vector<Criterion> criteria = {
      {1, "cycles n=3..12: solver and pattern give ceil(n/3)", 5.0,
       criterion_cycles},
      {2, "paths n=1..12: solver gives ceil(n/3), pattern dominates", 5.0,
       criterion_paths},
      {3, "sunlets n=3..6: solver gives ceil((n+1)/2)", 30.0,
       criterion_sunlets},
      {4, "sunlet-deg m=3..5 x n=1..3 (+ m=6,n=3): solver gives n+floor(m/2)",
       300.0, criterion_sunlet_deg},
      {5, "sunlet-deg m=3..8 x n=1..4: radius floor(m/2)+n, centers are bases",
       2.0, criterion_radius},
      {6, "efficient-restricted optimum matches on all swept + 20 random "
          "graphs",
       300.0, criterion_efficient},
      {7, "gamma_b <= radius (single-vertex: max(1,radius)); edge additions "
          "never raise gamma_b",
       600.0, criterion_bounds},
      {8, "path pattern n=1..50: cost ceil(n/3), overspill <= 1 per side", 1.0,
       criterion_overspill},
      {9, "solve --threads 1 and --threads 4 emit byte-identical JSON", 0.0,
       criterion_determinism},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome outcome = criterion.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      outcome.expect(false, "runtime " + std::to_string(seconds) +
                                "s exceeded budget " +
                                std::to_string(criterion.budget_seconds) + "s");
    }
    std::printf("%s  criterion %d: %s (%.2fs", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.description.c_str(), seconds);
    if (criterion.budget_seconds > 0) {
      std::printf(" / budget %.0fs", criterion.budget_seconds);
    }
    std::printf(")\n");
    if (!outcome.pass) {
      std::printf("      %s\n", outcome.detail.c_str());
      all_pass = false;
    }
  }

  std::error_code ec;
  std::filesystem::remove_all(g_dir, ec);

  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
