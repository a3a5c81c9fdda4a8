/* Copyright 2026 the stqubo developers
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

/* stqubo - compile NP-hard spanning tree problems (k-minimum spanning tree,
 * degree-constrained MST, minimum/maximum leaf spanning tree) into QUBO
 * models, solve them at desk scale, and decode and verify the results.
 *
 * The library is exposed through opaque handles and status codes. All
 * functions that can fail take an optional error buffer that receives a
 * human-readable message. Handles are freed with the matching *_free
 * function; strings returned through `char**` out-parameters are freed with
 * stq_string_free. Vertex ids are 1-based on this surface, matching the
 * edge-list text format.
 */

#ifndef STQUBO_H
#define STQUBO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STQ_API __declspec(dllexport)
#else
#define STQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stq_status {
    STQ_OK = 0,
    STQ_ERROR_INVALID_ARGUMENT = 1,
    STQ_ERROR_PARSE = 2,
    STQ_ERROR_IO = 3,
    STQ_ERROR_TOO_LARGE = 4, /* a solver or oracle size cap was exceeded */
    STQ_INFEASIBLE = 5       /* no feasible solution exists */
} stq_status;

typedef enum stq_problem_kind {
    STQ_PROBLEM_KMST = 0,     /* minimum-weight tree on exactly k vertices */
    STQ_PROBLEM_DCMST = 1,    /* MST under a uniform maximum-degree bound */
    STQ_PROBLEM_MIN_LEAF = 2, /* spanning tree with fewest leaves */
    STQ_PROBLEM_MAX_LEAF = 3  /* spanning tree with most leaves */
} stq_problem_kind;

typedef enum stq_solver_kind {
    STQ_SOLVER_EXHAUSTIVE = 0, /* exact, at most 26 variables */
    STQ_SOLVER_ANNEAL = 1,     /* simulated annealing, any size */
    STQ_SOLVER_STRUCTURED = 2  /* feasible-encoding enumeration, n <= 7 */
} stq_solver_kind;

typedef struct stq_graph stq_graph;
typedef struct stq_problem stq_problem;
typedef struct stq_solution stq_solution;

/* Build parameters. k applies to kMST, delta to DCMST. lambda_b <= 0 selects
 * 1; lambda_a <= 0 selects the default bound lambda_b * n * max_weight + 1
 * (lambda_b * n + 1 for the unweighted leaf problems). */
typedef struct stq_build_params {
    int k;
    int delta;
    double lambda_a;
    double lambda_b;
} stq_build_params;

/* Annealing parameters; any field <= 0 selects its default
 * (sweeps 1000, restarts 100, beta 0.1 -> 10, threads = hardware). */
typedef struct stq_anneal_params {
    int sweeps;
    int restarts;
    double beta_initial;
    double beta_final;
    uint64_t seed;
    int threads;
} stq_anneal_params;

STQ_API const char* stq_version(void);
STQ_API const char* stq_status_name(stq_status status);
STQ_API void stq_string_free(char* text);

/* ---- graphs -------------------------------------------------------- */

/* Parses the edge-list text format: header "n m", then m lines "u v w"
 * (1-based ids, non-negative weights); '#' starts a comment line. */
STQ_API stq_status stq_graph_parse(const char* text, stq_graph** out, char* errbuf,
                                   size_t errbuf_size);
STQ_API stq_status stq_graph_read_file(const char* path, stq_graph** out, char* errbuf,
                                       size_t errbuf_size);
STQ_API void stq_graph_free(stq_graph* graph);
STQ_API int stq_graph_num_vertices(const stq_graph* graph);
STQ_API int stq_graph_num_edges(const stq_graph* graph);
STQ_API int stq_graph_is_connected(const stq_graph* graph);
/* 1 when every edge carries the same weight (vacuously for <= 1 edge). The
 * leaf problems ignore weights, so non-uniform weights deserve a warning. */
STQ_API int stq_graph_has_uniform_weights(const stq_graph* graph);

/* ---- problem compilation ------------------------------------------- */

STQ_API stq_status stq_problem_build(stq_problem_kind kind, const stq_graph* graph,
                                     const stq_build_params* params, stq_problem** out,
                                     char* errbuf, size_t errbuf_size);
STQ_API void stq_problem_free(stq_problem* problem);

STQ_API int stq_problem_num_variables(const stq_problem* problem);
/* Closed-form variable count; always equals stq_problem_num_variables. */
STQ_API long long stq_problem_formula_num_variables(const stq_problem* problem);
STQ_API int stq_problem_num_linear_terms(const stq_problem* problem);
STQ_API int stq_problem_num_quadratic_terms(const stq_problem* problem);
STQ_API double stq_problem_lambda_a(const stq_problem* problem);
STQ_API double stq_problem_lambda_b(const stq_problem* problem);

/* Sparse QUBO text ("p qubo ..." with 0-based indices and an offset comment). */
STQ_API stq_status stq_problem_qubo_text(const stq_problem* problem, char** out);
/* JSON sidecar mapping each variable index to its role, for decoding
 * externally produced samples. */
STQ_API stq_status stq_problem_layout_json(const stq_problem* problem, char** out);

/* ---- solving and decoding ------------------------------------------ */

/* STQ_INFEASIBLE (with no solution handle) is returned when the structured
 * solver finds no constraint-satisfying encoding at all. An exhaustive or
 * annealed ground state that decodes to an infeasible structure is returned
 * as a solution with stq_solution_is_valid 0. */
STQ_API stq_status stq_solve(const stq_problem* problem, stq_solver_kind solver,
                             const stq_anneal_params* anneal, stq_solution** out, char* errbuf,
                             size_t errbuf_size);
STQ_API void stq_solution_free(stq_solution* solution);

STQ_API double stq_solution_energy(const stq_solution* solution);
STQ_API int stq_solution_is_valid(const stq_solution* solution);
/* Tree weight or leaf count, recomputed from the decoded structure (never
 * from model energy). Meaningful when valid. */
STQ_API double stq_solution_objective(const stq_solution* solution);
STQ_API int stq_solution_num_vertices(const stq_solution* solution);
/* 1-based vertex id at a permutation position, or 0 out of range. */
STQ_API int stq_solution_vertex_at(const stq_solution* solution, int position);
STQ_API int stq_solution_num_edges(const stq_solution* solution);
STQ_API stq_status stq_solution_edge(const stq_solution* solution, int index, int* u, int* v);
STQ_API int stq_solution_num_bits(const stq_solution* solution);
STQ_API int stq_solution_bit(const stq_solution* solution, int index);
/* One line per edge "u v", then "objective <val>", "valid <bool>". */
STQ_API stq_status stq_solution_text(const stq_solution* solution, char** out);
/* Newline-separated violation reasons (empty string when valid). */
STQ_API stq_status stq_solution_violations(const stq_solution* solution, char** out);

/* ---- independent oracle -------------------------------------------- */

/* Brute-force/classical ground truth; writes the optimum into *objective and
 * returns STQ_OK, or returns STQ_INFEASIBLE. Subject to small size caps. */
STQ_API stq_status stq_oracle_solve(stq_problem_kind kind, const stq_graph* graph,
                                    const stq_build_params* params, double* objective,
                                    char* errbuf, size_t errbuf_size);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STQUBO_H */
