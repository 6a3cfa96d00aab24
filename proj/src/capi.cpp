#include "broadcastdom.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "bdom/broadcast.hpp"
#include "bdom/constructions.hpp"
#include "bdom/error.hpp"
#include "bdom/families.hpp"
#include "bdom/formulas.hpp"
#include "bdom/graph.hpp"
#include "bdom/io.hpp"
#include "bdom/solver.hpp"

struct bdom_graph {
  bdom::Graph value;
};

struct bdom_metrics {
  bdom::EccentricityProfile value;
};

struct bdom_assignment {
  bdom::BroadcastAssignment value;
};

struct bdom_coverage {
  bdom::CoverageReport value;
};

struct bdom_solve_result {
  bdom::SolveResult value;
};

struct bdom_verify_report {
  std::vector<bdom::VerificationRow> rows;
  std::vector<std::string> labels;
  std::vector<std::string> family_json;
  bool all_match = false;
};

namespace {

thread_local std::string t_last_error;

bdom_status map_code(bdom::ErrorCode code) {
  using bdom::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return BDOM_E_INVALID_ARGUMENT;
    case ErrorCode::InvalidVertex:
      return BDOM_E_INVALID_VERTEX;
    case ErrorCode::UnreachableVertex:
      return BDOM_E_UNREACHABLE_VERTEX;
    case ErrorCode::InvalidFamilyParameter:
      return BDOM_E_INVALID_FAMILY_PARAMETER;
    case ErrorCode::InvalidEdge:
      return BDOM_E_INVALID_EDGE;
    case ErrorCode::ParseError:
      return BDOM_E_PARSE;
    case ErrorCode::BudgetExhausted:
      return BDOM_E_BUDGET_EXHAUSTED;
  }
  return BDOM_E_INTERNAL;
}

bdom_status fail(bdom_status status, const char* message) {
  t_last_error = message;
  return status;
}

template <typename Fn>
bdom_status guarded(Fn&& fn) {
  try {
    fn();
    return BDOM_OK;
  } catch (const bdom::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return BDOM_E_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return BDOM_E_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

bdom::FamilySpec to_spec(const bdom_family_spec* spec) {
  if (!spec) {
    bdom::raise(bdom::ErrorCode::InvalidArgument, "family spec is NULL");
  }
  switch (spec->kind) {
    case BDOM_FAMILY_PATH:
      return bdom::Path{static_cast<int>(spec->n)};
    case BDOM_FAMILY_CYCLE:
      return bdom::Cycle{static_cast<int>(spec->n)};
    case BDOM_FAMILY_SUNLET:
      return bdom::Sunlet{static_cast<int>(spec->n)};
    case BDOM_FAMILY_SUNLET_DEG:
      return bdom::SunletDeg{static_cast<int>(spec->m),
                             static_cast<int>(spec->n)};
    case BDOM_FAMILY_GEN_SUNLET: {
      bdom::GeneralizedSunlet s;
      s.m = static_cast<int>(spec->m);
      if (spec->lengths_count > 0 && !spec->lengths) {
        bdom::raise(bdom::ErrorCode::InvalidArgument,
                    "lengths is NULL but lengths_count > 0");
      }
      s.lengths.reserve(spec->lengths_count);
      for (size_t i = 0; i < spec->lengths_count; ++i) {
        s.lengths.push_back(static_cast<int>(spec->lengths[i]));
      }
      return s;
    }
  }
  bdom::raise(bdom::ErrorCode::InvalidArgument, "unknown family kind");
}

bdom_verify_report* make_report(std::vector<bdom::VerificationRow> rows) {
  auto* report = new bdom_verify_report;
  report->rows = std::move(rows);
  report->all_match = true;
  for (const auto& row : report->rows) {
    report->labels.push_back(bdom::family_label(row.spec));
    report->family_json.push_back(bdom::family_to_json_text(row.spec));
    if (!row.all_match || !row.construction_dominates) {
      report->all_match = false;
    }
  }
  return report;
}

}  // namespace

extern "C" {

const char* bdom_status_name(bdom_status status) {
  switch (status) {
    case BDOM_OK:
      return "ok";
    case BDOM_E_INVALID_ARGUMENT:
      return "invalid-argument";
    case BDOM_E_INVALID_VERTEX:
      return "invalid-vertex";
    case BDOM_E_UNREACHABLE_VERTEX:
      return "unreachable-vertex";
    case BDOM_E_INVALID_FAMILY_PARAMETER:
      return "invalid-family-parameter";
    case BDOM_E_INVALID_EDGE:
      return "invalid-edge";
    case BDOM_E_PARSE:
      return "parse-error";
    case BDOM_E_BUDGET_EXHAUSTED:
      return "budget-exhausted";
    case BDOM_E_NO_FORMULA:
      return "no-formula";
    case BDOM_E_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

const char* bdom_last_error_message(void) { return t_last_error.c_str(); }

void bdom_string_free(char* text) { std::free(text); }

/* ---- graphs ---- */

bdom_status bdom_graph_generate(const bdom_family_spec* spec,
                                bdom_graph** out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new bdom_graph{bdom::generate(to_spec(spec))}; });
}

bdom_status bdom_graph_from_json(const char* text, bdom_graph** out) {
  if (!text || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] { *out = new bdom_graph{bdom::read_graph(text)}; });
}

bdom_status bdom_graph_to_json(const bdom_graph* g, char** out_text) {
  if (!g || !out_text) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] { *out_text = copy_string(bdom::write_graph(g->value)); });
}

void bdom_graph_free(bdom_graph* g) { delete g; }

uint32_t bdom_graph_vertex_count(const bdom_graph* g) {
  return g ? static_cast<uint32_t>(g->value.vertex_count()) : 0;
}

uint64_t bdom_graph_edge_count(const bdom_graph* g) {
  return g ? static_cast<uint64_t>(g->value.edge_count()) : 0;
}

bdom_status bdom_graph_degree(const bdom_graph* g, uint32_t vertex,
                              uint32_t* out) {
  if (!g || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] {
    *out = static_cast<uint32_t>(g->value.degree(static_cast<int>(vertex)));
  });
}

bdom_status bdom_graph_role(const bdom_graph* g, uint32_t vertex,
                            bdom_role* out) {
  if (!g || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] {
    switch (g->value.role(static_cast<int>(vertex))) {
      case bdom::Role::Plain:
        *out = BDOM_ROLE_PLAIN;
        break;
      case bdom::Role::Base:
        *out = BDOM_ROLE_BASE;
        break;
      case bdom::Role::Pendant:
        *out = BDOM_ROLE_PENDANT;
        break;
      case bdom::Role::Leaf:
        *out = BDOM_ROLE_LEAF;
        break;
    }
  });
}

bdom_status bdom_graph_distances(const bdom_graph* g, uint32_t source,
                                 uint32_t* out_distances) {
  if (!g || !out_distances)
    return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] {
    const auto dist = bdom::distances(g->value, static_cast<int>(source));
    for (std::size_t i = 0; i < dist.size(); ++i) {
      out_distances[i] = static_cast<uint32_t>(dist[i]);
    }
  });
}

/* ---- metrics ---- */

bdom_status bdom_metrics_compute(const bdom_graph* g, bdom_metrics** out) {
  if (!g || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] { *out = new bdom_metrics{bdom::metrics(g->value)}; });
}

void bdom_metrics_free(bdom_metrics* m) { delete m; }

uint32_t bdom_metrics_radius(const bdom_metrics* m) {
  return m ? static_cast<uint32_t>(m->value.radius) : 0;
}

uint32_t bdom_metrics_diameter(const bdom_metrics* m) {
  return m ? static_cast<uint32_t>(m->value.diameter) : 0;
}

bdom_status bdom_metrics_eccentricity(const bdom_metrics* m, uint32_t vertex,
                                      uint32_t* out) {
  if (!m || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  if (vertex >= m->value.eccentricity.size()) {
    return fail(BDOM_E_INVALID_VERTEX, "vertex index out of range");
  }
  *out = static_cast<uint32_t>(m->value.eccentricity[vertex]);
  return BDOM_OK;
}

size_t bdom_metrics_center_count(const bdom_metrics* m) {
  return m ? m->value.center.size() : 0;
}

bdom_status bdom_metrics_center_vertex(const bdom_metrics* m, size_t index,
                                       uint32_t* out) {
  if (!m || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  if (index >= m->value.center.size()) {
    return fail(BDOM_E_INVALID_ARGUMENT, "center index out of range");
  }
  *out = static_cast<uint32_t>(m->value.center[index]);
  return BDOM_OK;
}

/* ---- assignments ---- */

bdom_status bdom_assignment_create(bdom_assignment** out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new bdom_assignment{}; });
}

bdom_status bdom_assignment_set(bdom_assignment* f, uint32_t vertex,
                                uint32_t strength) {
  if (!f) return fail(BDOM_E_INVALID_ARGUMENT, "assignment is NULL");
  return guarded([&] {
    f->value.set(static_cast<int>(vertex), static_cast<int>(strength));
  });
}

bdom_status bdom_assignment_from_json(const char* text,
                                      bdom_assignment** out) {
  if (!text || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded(
      [&] { *out = new bdom_assignment{bdom::read_broadcast(text)}; });
}

bdom_status bdom_assignment_to_json(const bdom_assignment* f,
                                    char** out_text) {
  if (!f || !out_text) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded(
      [&] { *out_text = copy_string(bdom::write_broadcast(f->value)); });
}

void bdom_assignment_free(bdom_assignment* f) { delete f; }

size_t bdom_assignment_size(const bdom_assignment* f) {
  return f ? f->value.size() : 0;
}

bdom_status bdom_assignment_entry(const bdom_assignment* f, size_t index,
                                  uint32_t* out_vertex,
                                  uint32_t* out_strength) {
  if (!f || !out_vertex || !out_strength)
    return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  if (index >= f->value.size()) {
    return fail(BDOM_E_INVALID_ARGUMENT, "entry index out of range");
  }
  const auto& e = f->value.entries()[index];
  *out_vertex = static_cast<uint32_t>(e.vertex);
  *out_strength = static_cast<uint32_t>(e.strength);
  return BDOM_OK;
}

int64_t bdom_assignment_cost(const bdom_assignment* f) {
  return f ? f->value.cost() : 0;
}

/* ---- coverage ---- */

bdom_status bdom_coverage_compute(const bdom_graph* g,
                                  const bdom_assignment* f,
                                  bdom_coverage** out) {
  if (!g || !f || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded(
      [&] { *out = new bdom_coverage{bdom::coverage(g->value, f->value)}; });
}

void bdom_coverage_free(bdom_coverage* c) { delete c; }

bdom_status bdom_coverage_count(const bdom_coverage* c, uint32_t vertex,
                                uint32_t* out) {
  if (!c || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  if (vertex >= c->value.coverage_count.size()) {
    return fail(BDOM_E_INVALID_VERTEX, "vertex index out of range");
  }
  *out = static_cast<uint32_t>(c->value.coverage_count[vertex]);
  return BDOM_OK;
}

int bdom_coverage_is_dominating(const bdom_coverage* c) {
  return c && c->value.is_dominating ? 1 : 0;
}

int bdom_coverage_is_efficient(const bdom_coverage* c) {
  return c && c->value.is_efficient ? 1 : 0;
}

size_t bdom_coverage_uncovered_count(const bdom_coverage* c) {
  return c ? c->value.uncovered.size() : 0;
}

bdom_status bdom_coverage_uncovered_vertex(const bdom_coverage* c,
                                           size_t index, uint32_t* out) {
  if (!c || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  if (index >= c->value.uncovered.size()) {
    return fail(BDOM_E_INVALID_ARGUMENT, "uncovered index out of range");
  }
  *out = static_cast<uint32_t>(c->value.uncovered[index]);
  return BDOM_OK;
}

/* ---- patterns and closed forms ---- */

bdom_status bdom_construct(const bdom_family_spec* spec,
                           bdom_assignment** out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  std::optional<bdom::BroadcastAssignment> pattern;
  bdom_status status =
      guarded([&] { pattern = bdom::construct_for(to_spec(spec)); });
  if (status != BDOM_OK) return status;
  if (!pattern) {
    return fail(BDOM_E_NO_FORMULA,
                "no known minimum-cost pattern for gen-sunlet; use the exact "
                "solver");
  }
  return guarded([&] { *out = new bdom_assignment{std::move(*pattern)}; });
}

bdom_status bdom_gamma_b_formula(const bdom_family_spec* spec, int64_t* out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  std::optional<int> value;
  bdom_status status =
      guarded([&] { value = bdom::gamma_b_formula(to_spec(spec)); });
  if (status != BDOM_OK) return status;
  if (!value) {
    return fail(BDOM_E_NO_FORMULA,
                "no closed-form gamma_b for gen-sunlet; use the exact solver");
  }
  *out = *value;
  return BDOM_OK;
}

bdom_status bdom_radius_formula(const bdom_family_spec* spec, int64_t* out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  std::optional<int> value;
  bdom_status status =
      guarded([&] { value = bdom::radius_formula(to_spec(spec)); });
  if (status != BDOM_OK) return status;
  if (!value) {
    return fail(BDOM_E_NO_FORMULA,
                "no closed-form radius for this family; compute metrics");
  }
  *out = *value;
  return BDOM_OK;
}

/* ---- solver ---- */

bdom_status bdom_solve(const bdom_graph* g, const bdom_solve_options* options,
                       bdom_solve_result** out) {
  if (!g || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] {
    bdom::SolveOptions opts;
    if (options) {
      if (options->max_cost > 0) {
        opts.max_cost = static_cast<int>(options->max_cost);
      }
      opts.require_efficient = options->require_efficient != 0;
      opts.threads = options->threads > 1 ? static_cast<int>(options->threads)
                                          : 1;
    }
    *out = new bdom_solve_result{bdom::solve_exact(g->value, opts)};
  });
}

void bdom_solve_result_free(bdom_solve_result* r) { delete r; }

int64_t bdom_solve_result_gamma_b(const bdom_solve_result* r) {
  return r ? r->value.gamma_b : 0;
}

uint64_t bdom_solve_result_candidates_checked(const bdom_solve_result* r) {
  return r ? r->value.candidates_checked : 0;
}

double bdom_solve_result_elapsed_seconds(const bdom_solve_result* r) {
  return r ? r->value.elapsed.count() : 0.0;
}

bdom_status bdom_solve_result_witness(const bdom_solve_result* r,
                                      bdom_assignment** out) {
  if (!r || !out) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] { *out = new bdom_assignment{r->value.witness}; });
}

/* ---- verification ---- */

bdom_status bdom_verify_family(bdom_family_kind kind, uint32_t min,
                               uint32_t max, uint32_t m_min, uint32_t m_max,
                               uint32_t n_min, uint32_t n_max,
                               bdom_verify_report** out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    bdom::FamilyKind k;
    switch (kind) {
      case BDOM_FAMILY_PATH:
        k = bdom::FamilyKind::Path;
        break;
      case BDOM_FAMILY_CYCLE:
        k = bdom::FamilyKind::Cycle;
        break;
      case BDOM_FAMILY_SUNLET:
        k = bdom::FamilyKind::Sunlet;
        break;
      case BDOM_FAMILY_SUNLET_DEG:
        k = bdom::FamilyKind::SunletDeg;
        break;
      default:
        k = bdom::FamilyKind::GeneralizedSunlet;
        break;
    }
    bdom::VerifyRanges ranges;
    ranges.min = static_cast<int>(min);
    ranges.max = static_cast<int>(max);
    ranges.m_min = static_cast<int>(m_min);
    ranges.m_max = static_cast<int>(m_max);
    ranges.n_min = static_cast<int>(n_min);
    ranges.n_max = static_cast<int>(n_max);
    *out = make_report(bdom::verify_family(k, ranges));
  });
}

bdom_status bdom_verify_instance(const bdom_family_spec* spec,
                                 bdom_verify_report** out) {
  if (!out) return fail(BDOM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    std::vector<bdom::VerificationRow> rows{
        bdom::verify_instance(to_spec(spec))};
    *out = make_report(std::move(rows));
  });
}

void bdom_verify_report_free(bdom_verify_report* r) { delete r; }

size_t bdom_verify_report_row_count(const bdom_verify_report* r) {
  return r ? r->rows.size() : 0;
}

int bdom_verify_report_all_match(const bdom_verify_report* r) {
  return r && r->all_match ? 1 : 0;
}

const char* bdom_verify_row_family_label(const bdom_verify_report* r,
                                         size_t row) {
  return (r && row < r->labels.size()) ? r->labels[row].c_str() : "";
}

const char* bdom_verify_row_family_json(const bdom_verify_report* r,
                                        size_t row) {
  return (r && row < r->family_json.size()) ? r->family_json[row].c_str() : "";
}

int bdom_verify_row_has_formula(const bdom_verify_report* r, size_t row) {
  return (r && row < r->rows.size() && r->rows[row].formula_value) ? 1 : 0;
}

int64_t bdom_verify_row_formula(const bdom_verify_report* r, size_t row) {
  if (!r || row >= r->rows.size() || !r->rows[row].formula_value) return 0;
  return *r->rows[row].formula_value;
}

int bdom_verify_row_has_construction(const bdom_verify_report* r, size_t row) {
  return (r && row < r->rows.size() && r->rows[row].construction_cost) ? 1 : 0;
}

int64_t bdom_verify_row_construction_cost(const bdom_verify_report* r,
                                          size_t row) {
  if (!r || row >= r->rows.size() || !r->rows[row].construction_cost) return 0;
  return *r->rows[row].construction_cost;
}

int64_t bdom_verify_row_solver_value(const bdom_verify_report* r, size_t row) {
  return (r && row < r->rows.size()) ? r->rows[row].solver_value : 0;
}

int bdom_verify_row_all_match(const bdom_verify_report* r, size_t row) {
  return (r && row < r->rows.size() && r->rows[row].all_match) ? 1 : 0;
}

int bdom_verify_row_construction_dominates(const bdom_verify_report* r,
                                           size_t row) {
  return (r && row < r->rows.size() && r->rows[row].construction_dominates)
             ? 1
             : 0;
}

/* ---- export ---- */

bdom_status bdom_export_dot(const bdom_graph* g, const bdom_assignment* f,
                            char** out_text) {
  if (!g || !out_text) return fail(BDOM_E_INVALID_ARGUMENT, "argument is NULL");
  return guarded([&] {
    *out_text = copy_string(
        bdom::export_dot(g->value, f ? &f->value : nullptr));
  });
}

} /* extern "C" */
