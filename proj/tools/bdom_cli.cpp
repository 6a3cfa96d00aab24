// bdom — command-line front end for the broadcastdom shared library.
//
// Subcommands: gen, metrics, construct, solve, verify, export.
// Exit codes: 0 success; 1 verification mismatch or domination failure;
// 2 usage error; 3 I/O or parse error. With --json, failures also emit a
// machine-readable {"error": {...}} object on stderr. Data goes to stdout,
// diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "broadcastdom.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

bool g_json_errors = false;

struct CliError {
  int exit_code;
  std::string code;
  std::string message;
};

[[noreturn]] void fail_usage(const std::string& message) {
  throw CliError{kExitUsage, "usage-error", message};
}

[[noreturn]] void fail_status(bdom_status status) {
  int exit_code = kExitIo;
  switch (status) {
    case BDOM_E_INVALID_ARGUMENT:
    case BDOM_E_INVALID_FAMILY_PARAMETER:
    case BDOM_E_NO_FORMULA:
      exit_code = kExitUsage;
      break;
    case BDOM_E_BUDGET_EXHAUSTED:
      exit_code = kExitVerification;
      break;
    default:
      exit_code = kExitIo;
      break;
  }
  throw CliError{exit_code, bdom_status_name(status),
                 bdom_last_error_message()};
}

void check(bdom_status status) {
  if (status != BDOM_OK) fail_status(status);
}

// Minimal RAII for C API handles.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { reset(); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;

  T** out() {
    reset();
    return &ptr_;
  }
  T* get() const { return ptr_; }
  explicit operator bool() const { return ptr_ != nullptr; }

 private:
  void reset() {
    if (ptr_) Free(ptr_);
    ptr_ = nullptr;
  }
  T* ptr_ = nullptr;
};

using GraphHandle = Handle<bdom_graph, bdom_graph_free>;
using MetricsHandle = Handle<bdom_metrics, bdom_metrics_free>;
using AssignmentHandle = Handle<bdom_assignment, bdom_assignment_free>;
using CoverageHandle = Handle<bdom_coverage, bdom_coverage_free>;
using SolveHandle = Handle<bdom_solve_result, bdom_solve_result_free>;
using ReportHandle = Handle<bdom_verify_report, bdom_verify_report_free>;

std::string take_string(char* text) {
  std::string out(text ? text : "");
  bdom_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CliError{kExitIo, "io-error", "cannot open \"" + path + "\""};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw CliError{kExitIo, "io-error", "cannot write \"" + out_path + "\""};
  }
  out << text;
}

// ------------------------------------------------------------------
// Family parameters shared by gen / construct / verify
// ------------------------------------------------------------------

struct FamilyArgs {
  std::string family;
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<std::int64_t> lengths;

  // Backing storage for bdom_family_spec's lengths pointer.
  std::vector<std::uint32_t> lengths_u32;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family,
                  "family: path|cycle|sunlet|sunlet-deg|gen-sunlet")
      ->required();
  cmd->add_option("--n", args.n, "size n (branch length for sunlet-deg)");
  cmd->add_option("--m", args.m, "cycle size m (sunlet-deg, gen-sunlet)");
  cmd->add_option("--lengths", args.lengths,
                  "gen-sunlet branch lengths, comma separated")
      ->delimiter(',');
}

bdom_family_kind family_kind_of(const std::string& name) {
  if (name == "path") return BDOM_FAMILY_PATH;
  if (name == "cycle") return BDOM_FAMILY_CYCLE;
  if (name == "sunlet") return BDOM_FAMILY_SUNLET;
  if (name == "sunlet-deg") return BDOM_FAMILY_SUNLET_DEG;
  if (name == "gen-sunlet") return BDOM_FAMILY_GEN_SUNLET;
  fail_usage("unknown family \"" + name +
             "\" (expected path|cycle|sunlet|sunlet-deg|gen-sunlet)");
}

bdom_family_spec build_spec(FamilyArgs& args) {
  bdom_family_spec spec{};
  spec.kind = family_kind_of(args.family);
  switch (spec.kind) {
    case BDOM_FAMILY_PATH:
    case BDOM_FAMILY_CYCLE:
    case BDOM_FAMILY_SUNLET:
      if (args.n < 0) fail_usage(args.family + " requires --n");
      spec.n = static_cast<std::uint32_t>(args.n);
      break;
    case BDOM_FAMILY_SUNLET_DEG:
      if (args.m < 0) fail_usage("sunlet-deg requires --m");
      if (args.n < 0) fail_usage("sunlet-deg requires --n");
      spec.m = static_cast<std::uint32_t>(args.m);
      spec.n = static_cast<std::uint32_t>(args.n);
      break;
    case BDOM_FAMILY_GEN_SUNLET:
      if (args.m < 0) fail_usage("gen-sunlet requires --m");
      spec.m = static_cast<std::uint32_t>(args.m);
      args.lengths_u32.clear();
      if (!args.lengths.empty()) {
        for (std::int64_t len : args.lengths) {
          if (len < 0) fail_usage("--lengths entries must be >= 0");
          args.lengths_u32.push_back(static_cast<std::uint32_t>(len));
        }
        if (static_cast<std::int64_t>(args.lengths_u32.size()) != args.m) {
          fail_usage("gen-sunlet needs exactly m=" + std::to_string(args.m) +
                     " entries in --lengths (got " +
                     std::to_string(args.lengths_u32.size()) + ")");
        }
      } else {
        // No explicit list: --n is the uniform branch length.
        if (args.n < 0) fail_usage("gen-sunlet requires --lengths or --n");
        args.lengths_u32.assign(static_cast<std::size_t>(args.m),
                                static_cast<std::uint32_t>(args.n));
      }
      spec.lengths = args.lengths_u32.data();
      spec.lengths_count = args.lengths_u32.size();
      break;
  }
  return spec;
}

// ------------------------------------------------------------------
// Shared rendering helpers
// ------------------------------------------------------------------

json witness_as_json(const bdom_assignment* f) {
  char* text = nullptr;
  check(bdom_assignment_to_json(f, &text));
  return json::parse(take_string(text));
}

std::string witness_as_text(const bdom_assignment* f) {
  std::ostringstream out;
  const std::size_t size = bdom_assignment_size(f);
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t vertex = 0;
    std::uint32_t strength = 0;
    check(bdom_assignment_entry(f, i, &vertex, &strength));
    if (i) out << " ";
    out << vertex + 1 << ":" << strength;
  }
  return out.str();
}

// Every emitted broadcast document is re-validated against its graph; a
// non-dominating "optimal" assignment can only mean an internal bug and must
// never reach disk.
void require_dominating(const bdom_graph* g, const bdom_assignment* f) {
  CoverageHandle cov;
  check(bdom_coverage_compute(g, f, cov.out()));
  if (!bdom_coverage_is_dominating(cov.get())) {
    throw CliError{kExitVerification, "not-dominating",
                   "assignment failed domination re-validation"};
  }
}

// ------------------------------------------------------------------
// Subcommands
// ------------------------------------------------------------------

void run_gen(FamilyArgs& family, const std::string& out_path) {
  bdom_family_spec spec = build_spec(family);
  GraphHandle graph;
  check(bdom_graph_generate(&spec, graph.out()));
  char* text = nullptr;
  check(bdom_graph_to_json(graph.get(), &text));
  write_output(take_string(text), out_path);
}

void run_metrics(const std::string& path, bool as_json) {
  g_json_errors = as_json;
  const std::string text = read_file(path);
  GraphHandle graph;
  check(bdom_graph_from_json(text.c_str(), graph.out()));
  MetricsHandle profile;
  check(bdom_metrics_compute(graph.get(), profile.out()));

  const std::uint32_t n = bdom_graph_vertex_count(graph.get());
  std::vector<std::uint32_t> ecc(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    check(bdom_metrics_eccentricity(profile.get(), v, &ecc[v]));
  }
  std::vector<std::uint32_t> center(bdom_metrics_center_count(profile.get()));
  for (std::size_t i = 0; i < center.size(); ++i) {
    check(bdom_metrics_center_vertex(profile.get(), i, &center[i]));
  }

  if (as_json) {
    json doc;
    doc["radius"] = bdom_metrics_radius(profile.get());
    doc["diameter"] = bdom_metrics_diameter(profile.get());
    json centers = json::array();
    for (std::uint32_t v : center) centers.push_back(v + 1);
    doc["center"] = std::move(centers);
    doc["eccentricities"] = ecc;
    std::cout << doc.dump() << "\n";
    return;
  }

  std::cout << "vertices: " << n << "\n";
  std::cout << "radius: " << bdom_metrics_radius(profile.get()) << "\n";
  std::cout << "diameter: " << bdom_metrics_diameter(profile.get()) << "\n";
  std::cout << "center:";
  for (std::uint32_t v : center) std::cout << " " << v + 1;
  std::cout << "\n";
  std::cout << "eccentricity:";
  for (std::uint32_t e : ecc) std::cout << " " << e;
  std::cout << "\n";
}

void run_construct(FamilyArgs& family, const std::string& out_path) {
  bdom_family_spec spec = build_spec(family);
  AssignmentHandle pattern;
  check(bdom_construct(&spec, pattern.out()));

  GraphHandle graph;
  check(bdom_graph_generate(&spec, graph.out()));
  require_dominating(graph.get(), pattern.get());

  char* text = nullptr;
  check(bdom_assignment_to_json(pattern.get(), &text));
  write_output(take_string(text), out_path);
}

void run_solve(const std::string& path, bool efficient,
               const std::string& max_cost, int threads, bool as_json) {
  g_json_errors = as_json;

  bdom_solve_options options{};
  options.require_efficient = efficient ? 1 : 0;
  options.threads = static_cast<std::uint32_t>(threads);
  if (max_cost == "auto") {
    options.max_cost = 0;
  } else {
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(max_cost, &used);
      if (used != max_cost.size()) value = 0;
    } catch (const std::exception&) {
      value = 0;
    }
    if (value < 1) fail_usage("--max-cost expects \"auto\" or an integer >= 1");
    options.max_cost = static_cast<std::uint32_t>(value);
  }

  const std::string text = read_file(path);
  GraphHandle graph;
  check(bdom_graph_from_json(text.c_str(), graph.out()));

  SolveHandle result;
  check(bdom_solve(graph.get(), &options, result.out()));
  AssignmentHandle witness;
  check(bdom_solve_result_witness(result.get(), witness.out()));
  require_dominating(graph.get(), witness.get());

  if (as_json) {
    // Canonical: no timing field, so output is stable across runs and
    // thread counts.
    json doc;
    doc["gamma_b"] = bdom_solve_result_gamma_b(result.get());
    doc["candidates_checked"] =
        bdom_solve_result_candidates_checked(result.get());
    doc["efficient"] = efficient;
    doc["witness"] = witness_as_json(witness.get());
    std::cout << doc.dump() << "\n";
    return;
  }

  std::cout << "gamma_b: " << bdom_solve_result_gamma_b(result.get()) << "\n";
  std::cout << "witness: " << witness_as_text(witness.get()) << "\n";
  std::cout << "cost: " << bdom_assignment_cost(witness.get()) << "\n";
  std::cout << "candidates_checked: "
            << bdom_solve_result_candidates_checked(result.get()) << "\n";
  std::cout << std::fixed << std::setprecision(3) << "elapsed_ms: "
            << bdom_solve_result_elapsed_seconds(result.get()) * 1000.0
            << "\n";
}

struct VerifyArgs {
  FamilyArgs family;
  std::int64_t min = -1;
  std::int64_t max = -1;
  std::int64_t m_min = -1;
  std::int64_t m_max = -1;
  std::int64_t n_min = -1;
  std::int64_t n_max = -1;
  bool as_json = false;
};

void run_verify(VerifyArgs& args) {
  g_json_errors = args.as_json;
  const bdom_family_kind kind = family_kind_of(args.family.family);

  ReportHandle report;
  if (kind == BDOM_FAMILY_GEN_SUNLET) {
    // No closed form exists, so a gen-sunlet row is solver-only and is
    // verified one instance at a time.
    bdom_family_spec spec = build_spec(args.family);
    check(bdom_verify_instance(&spec, report.out()));
  } else if (kind == BDOM_FAMILY_SUNLET_DEG) {
    if (args.m_min < 0 || args.m_max < 0 || args.n_min < 0 || args.n_max < 0) {
      fail_usage("sunlet-deg verification requires --m-min, --m-max, --n-min "
                 "and --n-max");
    }
    check(bdom_verify_family(kind, 0, 0,
                             static_cast<std::uint32_t>(args.m_min),
                             static_cast<std::uint32_t>(args.m_max),
                             static_cast<std::uint32_t>(args.n_min),
                             static_cast<std::uint32_t>(args.n_max),
                             report.out()));
  } else {
    if (args.min < 0 || args.max < 0) {
      fail_usage(args.family.family +
                 " verification requires --min and --max");
    }
    check(bdom_verify_family(kind, static_cast<std::uint32_t>(args.min),
                             static_cast<std::uint32_t>(args.max), 0, 0, 0, 0,
                             report.out()));
  }

  const std::size_t rows = bdom_verify_report_row_count(report.get());
  if (args.as_json) {
    for (std::size_t i = 0; i < rows; ++i) {
      json row;
      row["family"] =
          json::parse(bdom_verify_row_family_json(report.get(), i));
      row["formula"] = bdom_verify_row_has_formula(report.get(), i)
                           ? json(bdom_verify_row_formula(report.get(), i))
                           : json(nullptr);
      row["construction_cost"] =
          bdom_verify_row_has_construction(report.get(), i)
              ? json(bdom_verify_row_construction_cost(report.get(), i))
              : json(nullptr);
      row["construction_dominates"] =
          bdom_verify_row_construction_dominates(report.get(), i) != 0;
      row["solver"] = bdom_verify_row_solver_value(report.get(), i);
      row["all_match"] = bdom_verify_row_all_match(report.get(), i) != 0;
      std::cout << row.dump() << "\n";
    }
  } else {
    std::size_t label_width = std::string("family").size();
    for (std::size_t i = 0; i < rows; ++i) {
      label_width = std::max(
          label_width,
          std::string(bdom_verify_row_family_label(report.get(), i)).size());
    }
    std::cout << std::left << std::setw(static_cast<int>(label_width) + 2)
              << "family" << std::right << std::setw(8) << "formula"
              << std::setw(14) << "construction" << std::setw(8) << "solver"
              << "  match" << "\n";
    auto cell = [](bool has, std::int64_t value) {
      return has ? std::to_string(value) : std::string("-");
    };
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      const bool ok =
          bdom_verify_row_all_match(report.get(), i) != 0 &&
          bdom_verify_row_construction_dominates(report.get(), i) != 0;
      if (!ok) ++mismatches;
      std::cout << std::left << std::setw(static_cast<int>(label_width) + 2)
                << bdom_verify_row_family_label(report.get(), i) << std::right
                << std::setw(8)
                << cell(bdom_verify_row_has_formula(report.get(), i) != 0,
                        bdom_verify_row_formula(report.get(), i))
                << std::setw(14)
                << cell(bdom_verify_row_has_construction(report.get(), i) != 0,
                        bdom_verify_row_construction_cost(report.get(), i))
                << std::setw(8) << bdom_verify_row_solver_value(report.get(), i)
                << "  " << (ok ? "yes" : "NO") << "\n";
    }
    std::cout << rows - mismatches << "/" << rows << " rows match\n";
  }

  if (!bdom_verify_report_all_match(report.get())) {
    throw CliError{kExitVerification, "verification-mismatch",
                   "verification found mismatching rows"};
  }
}

void run_export(const std::string& path, const std::string& format,
                const std::string& broadcast_path,
                const std::string& out_path) {
  if (format != "dot") {
    fail_usage("unsupported export format \"" + format +
               "\" (expected: dot)");
  }
  const std::string text = read_file(path);
  GraphHandle graph;
  check(bdom_graph_from_json(text.c_str(), graph.out()));

  AssignmentHandle assignment;
  if (!broadcast_path.empty()) {
    const std::string btext = read_file(broadcast_path);
    check(bdom_assignment_from_json(btext.c_str(), assignment.out()));
  }

  char* dot = nullptr;
  check(bdom_export_dot(graph.get(), assignment.get(), &dot));
  write_output(take_string(dot), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bdom — exact broadcast domination toolkit"};
  app.require_subcommand(1);

  FamilyArgs gen_family;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph family instance");
  add_family_options(gen, gen_family);
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] { run_gen(gen_family, gen_out); });

  std::string metrics_file;
  bool metrics_json = false;
  auto* metrics =
      app.add_subcommand("metrics", "radius, diameter, eccentricities, center");
  metrics->add_option("file", metrics_file, "graph document")->required();
  metrics->add_flag("--json", metrics_json, "machine-readable output");
  metrics->callback([&] { run_metrics(metrics_file, metrics_json); });

  FamilyArgs construct_family;
  std::string construct_out;
  auto* construct = app.add_subcommand(
      "construct", "emit the minimum-cost broadcast pattern for a family");
  add_family_options(construct, construct_family);
  construct->add_option("--out", construct_out, "output file (default stdout)");
  construct->callback([&] { run_construct(construct_family, construct_out); });

  std::string solve_file;
  bool solve_efficient = false;
  std::string solve_max_cost = "auto";
  int solve_threads = 1;
  bool solve_json = false;
  auto* solve =
      app.add_subcommand("solve", "exact broadcast domination number");
  solve->add_option("file", solve_file, "graph document")->required();
  solve->add_flag("--efficient", solve_efficient,
                  "restrict to efficient assignments");
  solve->add_option("--max-cost", solve_max_cost,
                    "cost bound: auto or an integer >= 1");
  solve->add_option("--threads", solve_threads, "worker threads")
      ->check(CLI::Range(1, 256));
  solve->add_flag("--json", solve_json, "machine-readable output");
  solve->callback([&] {
    run_solve(solve_file, solve_efficient, solve_max_cost, solve_threads,
              solve_json);
  });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "cross-check formula, pattern and solver over a family sweep");
  add_family_options(verify, verify_args.family);
  verify->add_option("--min", verify_args.min, "smallest n (path/cycle/sunlet)");
  verify->add_option("--max", verify_args.max, "largest n (path/cycle/sunlet)");
  verify->add_option("--m-min", verify_args.m_min, "smallest m (sunlet-deg)");
  verify->add_option("--m-max", verify_args.m_max, "largest m (sunlet-deg)");
  verify->add_option("--n-min", verify_args.n_min, "smallest n (sunlet-deg)");
  verify->add_option("--n-max", verify_args.n_max, "largest n (sunlet-deg)");
  verify->add_flag("--json", verify_args.as_json, "JSON lines output");
  verify->callback([&] { run_verify(verify_args); });

  std::string export_file;
  std::string export_format;
  std::string export_broadcast;
  std::string export_out;
  auto* exporter = app.add_subcommand("export", "export a graph for rendering");
  exporter->add_option("file", export_file, "graph document")->required();
  exporter->add_option("--format", export_format, "output format (dot)")
      ->required();
  exporter->add_option("--broadcast", export_broadcast,
                       "broadcast document to highlight");
  exporter->add_option("--out", export_out, "output file (default stdout)");
  exporter->callback([&] {
    run_export(export_file, export_format, export_broadcast, export_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CliError& e) {
    if (g_json_errors) {
      json err;
      err["error"] = {{"code", e.code}, {"message", e.message}};
      std::cerr << err.dump() << "\n";
    } else {
      std::cerr << "error: " << e.message << "\n";
    }
    return e.exit_code;
  }
  return 0;
}
