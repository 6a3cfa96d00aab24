/*
 * broadcastdom — exact broadcast domination toolkit, C API.
 *
 * A broadcast assignment gives selected graph vertices positive integer
 * signal strengths; a vertex is covered when some broadcast vertex lies
 * within that many hops. This library generates the cycle/sunlet graph
 * families, evaluates assignments, emits the known minimum-cost patterns,
 * computes the exact broadcast domination number gamma_b by cost-bounded
 * search, and cross-verifies patterns and closed forms against the solver.
 *
 * Conventions:
 *   - Every fallible function returns a bdom_status; BDOM_OK is 0. On
 *     failure, bdom_last_error_message() describes the problem for the
 *     calling thread.
 *   - Objects returned through bdom_*** out-parameters are owned by the
 *     caller and released with the matching bdom_*_free function. Strings are
 *     released with bdom_string_free.
 *   - Vertices are 0-based indices at this interface. Serialized documents
 *     (JSON, DOT) label vertices 1-based.
 */

#ifndef BROADCASTDOM_H
#define BROADCASTDOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BDOM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BDOM_API __attribute__((visibility("default")))
#else
#define BDOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdom_status {
  BDOM_OK = 0,
  BDOM_E_INVALID_ARGUMENT = 1,
  BDOM_E_INVALID_VERTEX = 2,
  BDOM_E_UNREACHABLE_VERTEX = 3,
  BDOM_E_INVALID_FAMILY_PARAMETER = 4,
  BDOM_E_INVALID_EDGE = 5,
  BDOM_E_PARSE = 6,
  BDOM_E_BUDGET_EXHAUSTED = 7,
  BDOM_E_NO_FORMULA = 8,
  BDOM_E_INTERNAL = 9
} bdom_status;

/* Stable kebab-case name for a status, e.g. "invalid-family-parameter". */
BDOM_API const char* bdom_status_name(bdom_status status);

/* Message describing this thread's most recent failure; never NULL. */
BDOM_API const char* bdom_last_error_message(void);

BDOM_API void bdom_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Graphs and graph families                                          */
/* ------------------------------------------------------------------ */

typedef struct bdom_graph bdom_graph;

typedef enum bdom_family_kind {
  BDOM_FAMILY_PATH = 0,
  BDOM_FAMILY_CYCLE = 1,
  BDOM_FAMILY_SUNLET = 2,
  BDOM_FAMILY_SUNLET_DEG = 3,
  BDOM_FAMILY_GEN_SUNLET = 4
} bdom_family_kind;

typedef struct bdom_family_spec {
  bdom_family_kind kind;
  /* path/cycle/sunlet size, or sunlet-deg branch length; ignored by
   * gen-sunlet */
  uint32_t n;
  /* cycle size for sunlet-deg and gen-sunlet; ignored otherwise */
  uint32_t m;
  /* gen-sunlet only: m branch lengths (entries may be 0); ignored otherwise */
  const uint32_t* lengths;
  size_t lengths_count;
} bdom_family_spec;

typedef enum bdom_role {
  BDOM_ROLE_PLAIN = 0,
  BDOM_ROLE_BASE = 1,
  BDOM_ROLE_PENDANT = 2,
  BDOM_ROLE_LEAF = 3
} bdom_role;

BDOM_API bdom_status bdom_graph_generate(const bdom_family_spec* spec,
                                         bdom_graph** out);
BDOM_API bdom_status bdom_graph_from_json(const char* text, bdom_graph** out);
BDOM_API bdom_status bdom_graph_to_json(const bdom_graph* g, char** out_text);
BDOM_API void bdom_graph_free(bdom_graph* g);

BDOM_API uint32_t bdom_graph_vertex_count(const bdom_graph* g);
BDOM_API uint64_t bdom_graph_edge_count(const bdom_graph* g);
BDOM_API bdom_status bdom_graph_degree(const bdom_graph* g, uint32_t vertex,
                                       uint32_t* out);
BDOM_API bdom_status bdom_graph_role(const bdom_graph* g, uint32_t vertex,
                                     bdom_role* out);

/* Hop distances from source into a caller-provided array of vertex_count
 * entries. */
BDOM_API bdom_status bdom_graph_distances(const bdom_graph* g, uint32_t source,
                                          uint32_t* out_distances);

/* ------------------------------------------------------------------ */
/* Metric profile                                                     */
/* ------------------------------------------------------------------ */

typedef struct bdom_metrics bdom_metrics;

BDOM_API bdom_status bdom_metrics_compute(const bdom_graph* g,
                                          bdom_metrics** out);
BDOM_API void bdom_metrics_free(bdom_metrics* m);
BDOM_API uint32_t bdom_metrics_radius(const bdom_metrics* m);
BDOM_API uint32_t bdom_metrics_diameter(const bdom_metrics* m);
BDOM_API bdom_status bdom_metrics_eccentricity(const bdom_metrics* m,
                                               uint32_t vertex, uint32_t* out);
BDOM_API size_t bdom_metrics_center_count(const bdom_metrics* m);
BDOM_API bdom_status bdom_metrics_center_vertex(const bdom_metrics* m,
                                                size_t index, uint32_t* out);

/* ------------------------------------------------------------------ */
/* Broadcast assignments and coverage                                 */
/* ------------------------------------------------------------------ */

typedef struct bdom_assignment bdom_assignment;

BDOM_API bdom_status bdom_assignment_create(bdom_assignment** out);
/* strength 0 erases the vertex from the support */
BDOM_API bdom_status bdom_assignment_set(bdom_assignment* f, uint32_t vertex,
                                         uint32_t strength);
BDOM_API bdom_status bdom_assignment_from_json(const char* text,
                                               bdom_assignment** out);
BDOM_API bdom_status bdom_assignment_to_json(const bdom_assignment* f,
                                             char** out_text);
BDOM_API void bdom_assignment_free(bdom_assignment* f);

BDOM_API size_t bdom_assignment_size(const bdom_assignment* f);
/* Entries are vertex-ascending. */
BDOM_API bdom_status bdom_assignment_entry(const bdom_assignment* f,
                                           size_t index, uint32_t* out_vertex,
                                           uint32_t* out_strength);
BDOM_API int64_t bdom_assignment_cost(const bdom_assignment* f);

typedef struct bdom_coverage bdom_coverage;

BDOM_API bdom_status bdom_coverage_compute(const bdom_graph* g,
                                           const bdom_assignment* f,
                                           bdom_coverage** out);
BDOM_API void bdom_coverage_free(bdom_coverage* c);
BDOM_API bdom_status bdom_coverage_count(const bdom_coverage* c,
                                         uint32_t vertex, uint32_t* out);
BDOM_API int bdom_coverage_is_dominating(const bdom_coverage* c);
BDOM_API int bdom_coverage_is_efficient(const bdom_coverage* c);
BDOM_API size_t bdom_coverage_uncovered_count(const bdom_coverage* c);
BDOM_API bdom_status bdom_coverage_uncovered_vertex(const bdom_coverage* c,
                                                    size_t index,
                                                    uint32_t* out);

/* ------------------------------------------------------------------ */
/* Patterns and closed forms                                          */
/* ------------------------------------------------------------------ */

/* Minimum-cost dominating pattern for the family instance;
 * BDOM_E_NO_FORMULA for gen-sunlet. */
BDOM_API bdom_status bdom_construct(const bdom_family_spec* spec,
                                    bdom_assignment** out);

/* Closed-form gamma_b; BDOM_E_NO_FORMULA for gen-sunlet. */
BDOM_API bdom_status bdom_gamma_b_formula(const bdom_family_spec* spec,
                                          int64_t* out);

/* Closed-form radius; BDOM_E_NO_FORMULA except for sunlet / sunlet-deg. */
BDOM_API bdom_status bdom_radius_formula(const bdom_family_spec* spec,
                                         int64_t* out);

/* ------------------------------------------------------------------ */
/* Exact solver                                                       */
/* ------------------------------------------------------------------ */

typedef struct bdom_solve_options {
  /* 0 selects the automatic bound max(1, radius) */
  uint32_t max_cost;
  int require_efficient;
  /* 0 or 1 single-threaded; the result never depends on this */
  uint32_t threads;
} bdom_solve_options;

typedef struct bdom_solve_result bdom_solve_result;

BDOM_API bdom_status bdom_solve(const bdom_graph* g,
                                const bdom_solve_options* options,
                                bdom_solve_result** out);
BDOM_API void bdom_solve_result_free(bdom_solve_result* r);
BDOM_API int64_t bdom_solve_result_gamma_b(const bdom_solve_result* r);
BDOM_API uint64_t
bdom_solve_result_candidates_checked(const bdom_solve_result* r);
BDOM_API double bdom_solve_result_elapsed_seconds(const bdom_solve_result* r);
BDOM_API bdom_status bdom_solve_result_witness(const bdom_solve_result* r,
                                               bdom_assignment** out);

/* ------------------------------------------------------------------ */
/* Verification harness                                               */
/* ------------------------------------------------------------------ */

typedef struct bdom_verify_report bdom_verify_report;

/* Sweeps the family: path/cycle/sunlet use [min, max] on n; sunlet-deg uses
 * [m_min, m_max] x [n_min, n_max]. Each row compares closed form, emitted
 * pattern cost and exact solver value. */
BDOM_API bdom_status bdom_verify_family(bdom_family_kind kind, uint32_t min,
                                        uint32_t max, uint32_t m_min,
                                        uint32_t m_max, uint32_t n_min,
                                        uint32_t n_max,
                                        bdom_verify_report** out);

/* Single-instance verification; for gen-sunlet the row is solver-only. */
BDOM_API bdom_status bdom_verify_instance(const bdom_family_spec* spec,
                                          bdom_verify_report** out);

BDOM_API void bdom_verify_report_free(bdom_verify_report* r);
BDOM_API size_t bdom_verify_report_row_count(const bdom_verify_report* r);
BDOM_API int bdom_verify_report_all_match(const bdom_verify_report* r);

BDOM_API const char* bdom_verify_row_family_label(const bdom_verify_report* r,
                                                  size_t row);
BDOM_API const char* bdom_verify_row_family_json(const bdom_verify_report* r,
                                                 size_t row);
BDOM_API int bdom_verify_row_has_formula(const bdom_verify_report* r,
                                         size_t row);
BDOM_API int64_t bdom_verify_row_formula(const bdom_verify_report* r,
                                         size_t row);
BDOM_API int bdom_verify_row_has_construction(const bdom_verify_report* r,
                                              size_t row);
BDOM_API int64_t bdom_verify_row_construction_cost(const bdom_verify_report* r,
                                                   size_t row);
BDOM_API int64_t bdom_verify_row_solver_value(const bdom_verify_report* r,
                                              size_t row);
BDOM_API int bdom_verify_row_all_match(const bdom_verify_report* r, size_t row);
BDOM_API int bdom_verify_row_construction_dominates(
    const bdom_verify_report* r, size_t row);

/* ------------------------------------------------------------------ */
/* Export                                                             */
/* ------------------------------------------------------------------ */

/* Undirected DOT; pass f = NULL for a plain rendering. With an assignment,
 * broadcast vertices are filled and annotated with their strength. */
BDOM_API bdom_status bdom_export_dot(const bdom_graph* g,
                                     const bdom_assignment* f,
                                     char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BROADCASTDOM_H */
