// Copyright 2026 the stqubo developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "stqubo.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "decode.hpp"
#include "oracle.hpp"
#include "problem.hpp"
#include "solve.hpp"

struct stq_graph {
    stq::Graph graph;
};

struct stq_problem {
    stq::ProblemSpec spec;
    stq::BuildResult built;
};

struct stq_solution {
    stq::SolveResult result;
    stq::TreeSolution tree;
};

namespace {

void set_error(char* errbuf, size_t errbuf_size, const char* message) {
    if (!errbuf || errbuf_size == 0) return;
    std::strncpy(errbuf, message, errbuf_size - 1);
    errbuf[errbuf_size - 1] = '\0';
}

char* copy_string(const std::string& text) {
    char* out = new (std::nothrow) char[text.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

stq_status classify(const std::exception& e) {
    if (dynamic_cast<const stq::ParseError*>(&e)) return STQ_ERROR_PARSE;
    const std::string what = e.what();
    if (what.find("not supported") != std::string::npos ||
        what.find("cap") != std::string::npos)
        return STQ_ERROR_TOO_LARGE;
    return STQ_ERROR_INVALID_ARGUMENT;
}

stq::ProblemSpec make_spec(stq_problem_kind kind, const stq::Graph& graph,
                           const stq_build_params* params) {
    stq_build_params defaults{0, 0, 0.0, 0.0};
    if (!params) params = &defaults;
    const double lambda_b = params->lambda_b > 0.0 ? params->lambda_b : 1.0;
    const double lambda_a = params->lambda_a > 0.0 ? params->lambda_a : 0.0;
    switch (kind) {
        case STQ_PROBLEM_KMST:
            return stq::make_kmst_spec(graph, params->k, lambda_b, lambda_a);
        case STQ_PROBLEM_DCMST:
            return stq::make_dcmst_spec(graph, params->delta, lambda_b, lambda_a);
        case STQ_PROBLEM_MIN_LEAF:
            return stq::make_mlst_spec(graph, stq::LeafObjective::Minimize, lambda_b, lambda_a);
        case STQ_PROBLEM_MAX_LEAF:
            return stq::make_mlst_spec(graph, stq::LeafObjective::Maximize, lambda_b, lambda_a);
    }
    throw std::invalid_argument("unknown problem kind");
}

} // namespace

extern "C" {

const char* stq_version(void) { return "stqubo 0.1.0"; }

const char* stq_status_name(stq_status status) {
    switch (status) {
        case STQ_OK: return "ok";
        case STQ_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case STQ_ERROR_PARSE: return "parse error";
        case STQ_ERROR_IO: return "io error";
        case STQ_ERROR_TOO_LARGE: return "size cap exceeded";
        case STQ_INFEASIBLE: return "infeasible";
    }
    return "unknown";
}

void stq_string_free(char* text) { delete[] text; }

stq_status stq_graph_parse(const char* text, stq_graph** out, char* errbuf, size_t errbuf_size) {
    if (!text || !out) {
        set_error(errbuf, errbuf_size, "null argument");
        return STQ_ERROR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        *out = new stq_graph{stq::Graph::parse(text)};
        return STQ_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_size, e.what());
        return classify(e);
    }
}

stq_status stq_graph_read_file(const char* path, stq_graph** out, char* errbuf,
                               size_t errbuf_size) {
    if (!path || !out) {
        set_error(errbuf, errbuf_size, "null argument");
        return STQ_ERROR_INVALID_ARGUMENT;
    }
    std::ifstream in(path);
    if (!in) {
        set_error(errbuf, errbuf_size, ("cannot open " + std::string(path)).c_str());
        return STQ_ERROR_IO;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return stq_graph_parse(text.str().c_str(), out, errbuf, errbuf_size);
}

void stq_graph_free(stq_graph* graph) { delete graph; }

int stq_graph_num_vertices(const stq_graph* graph) {
    return graph ? graph->graph.num_vertices() : 0;
}

int stq_graph_num_edges(const stq_graph* graph) { return graph ? graph->graph.num_edges() : 0; }

int stq_graph_is_connected(const stq_graph* graph) {
    return graph && graph->graph.is_connected() ? 1 : 0;
}

int stq_graph_has_uniform_weights(const stq_graph* graph) {
    if (!graph) return 1;
    const auto& edges = graph->graph.edges();
    for (const stq::Edge& e : edges)
        if (e.weight != edges.front().weight) return 0;
    return 1;
}

stq_status stq_problem_build(stq_problem_kind kind, const stq_graph* graph,
                             const stq_build_params* params, stq_problem** out, char* errbuf,
                             size_t errbuf_size) {
    if (!graph || !out) {
        set_error(errbuf, errbuf_size, "null argument");
        return STQ_ERROR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        stq::ProblemSpec spec = make_spec(kind, graph->graph, params);
        stq::BuildResult built = stq::build(spec);
        *out = new stq_problem{std::move(spec), std::move(built)};
        return STQ_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_size, e.what());
        return classify(e);
    }
}

void stq_problem_free(stq_problem* problem) { delete problem; }

int stq_problem_num_variables(const stq_problem* problem) {
    return problem ? problem->built.model.num_vars() : 0;
}

long long stq_problem_formula_num_variables(const stq_problem* problem) {
    return problem ? stq::variable_count_formula(problem->spec) : 0;
}

int stq_problem_num_linear_terms(const stq_problem* problem) {
    return problem ? problem->built.model.num_linear_terms() : 0;
}

int stq_problem_num_quadratic_terms(const stq_problem* problem) {
    return problem ? problem->built.model.num_quadratic_terms() : 0;
}

double stq_problem_lambda_a(const stq_problem* problem) {
    return problem ? stq::weights_of(problem->spec).constraint : 0.0;
}

double stq_problem_lambda_b(const stq_problem* problem) {
    return problem ? stq::weights_of(problem->spec).objective : 0.0;
}

stq_status stq_problem_qubo_text(const stq_problem* problem, char** out) {
    if (!problem || !out) return STQ_ERROR_INVALID_ARGUMENT;
    *out = copy_string(stq::to_qubo_text(problem->built.model));
    return *out ? STQ_OK : STQ_ERROR_INVALID_ARGUMENT;
}

stq_status stq_problem_layout_json(const stq_problem* problem, char** out) {
    if (!problem || !out) return STQ_ERROR_INVALID_ARGUMENT;
    *out = copy_string(stq::layout_json(problem->spec, problem->built.layout));
    return *out ? STQ_OK : STQ_ERROR_INVALID_ARGUMENT;
}

stq_status stq_solve(const stq_problem* problem, stq_solver_kind solver,
                     const stq_anneal_params* anneal, stq_solution** out, char* errbuf,
                     size_t errbuf_size) {
    if (!problem || !out) {
        set_error(errbuf, errbuf_size, "null argument");
        return STQ_ERROR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        stq::SolveResult result;
        switch (solver) {
            case STQ_SOLVER_EXHAUSTIVE:
                result = stq::solve_exhaustive(problem->built.model);
                break;
            case STQ_SOLVER_ANNEAL: {
                stq::AnnealSchedule schedule;
                int threads = 0;
                if (anneal) {
                    if (anneal->sweeps > 0) schedule.sweeps = anneal->sweeps;
                    if (anneal->restarts > 0) schedule.restarts = anneal->restarts;
                    if (anneal->beta_initial > 0.0) schedule.beta_initial = anneal->beta_initial;
                    if (anneal->beta_final > 0.0) schedule.beta_final = anneal->beta_final;
                    schedule.seed = anneal->seed;
                    threads = anneal->threads;
                }
                result = stq::solve_anneal(problem->built.model, schedule, threads);
                break;
            }
            case STQ_SOLVER_STRUCTURED: {
                auto best = stq::solve_structured(problem->spec, problem->built);
                if (!best) {
                    set_error(errbuf, errbuf_size, "no constraint-satisfying encoding exists");
                    return STQ_INFEASIBLE;
                }
                result = std::move(*best);
                break;
            }
            default:
                set_error(errbuf, errbuf_size, "unknown solver kind");
                return STQ_ERROR_INVALID_ARGUMENT;
        }
        stq::TreeSolution tree =
            stq::decode(problem->spec, problem->built.layout, result.assignment);
        *out = new stq_solution{std::move(result), std::move(tree)};
        return STQ_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_size, e.what());
        return classify(e);
    }
}

void stq_solution_free(stq_solution* solution) { delete solution; }

double stq_solution_energy(const stq_solution* solution) {
    return solution ? solution->result.energy : 0.0;
}

int stq_solution_is_valid(const stq_solution* solution) {
    return solution && solution->tree.valid ? 1 : 0;
}

double stq_solution_objective(const stq_solution* solution) {
    return solution ? solution->tree.objective : 0.0;
}

int stq_solution_num_vertices(const stq_solution* solution) {
    return solution ? static_cast<int>(solution->tree.vertices.size()) : 0;
}

int stq_solution_vertex_at(const stq_solution* solution, int position) {
    if (!solution || position < 0 ||
        position >= static_cast<int>(solution->tree.vertices.size()))
        return 0;
    return solution->tree.vertices[static_cast<size_t>(position)] + 1;
}

int stq_solution_num_edges(const stq_solution* solution) {
    return solution ? static_cast<int>(solution->tree.parent_edges.size()) : 0;
}

stq_status stq_solution_edge(const stq_solution* solution, int index, int* u, int* v) {
    if (!solution || !u || !v || index < 0 ||
        index >= static_cast<int>(solution->tree.parent_edges.size()))
        return STQ_ERROR_INVALID_ARGUMENT;
    *u = solution->tree.parent_edges[static_cast<size_t>(index)].first + 1;
    *v = solution->tree.parent_edges[static_cast<size_t>(index)].second + 1;
    return STQ_OK;
}

int stq_solution_num_bits(const stq_solution* solution) {
    return solution ? static_cast<int>(solution->result.assignment.size()) : 0;
}

int stq_solution_bit(const stq_solution* solution, int index) {
    if (!solution || index < 0 ||
        index >= static_cast<int>(solution->result.assignment.size()))
        return 0;
    return solution->result.assignment[static_cast<size_t>(index)] ? 1 : 0;
}

stq_status stq_solution_text(const stq_solution* solution, char** out) {
    if (!solution || !out) return STQ_ERROR_INVALID_ARGUMENT;
    *out = copy_string(stq::to_text(solution->tree));
    return *out ? STQ_OK : STQ_ERROR_INVALID_ARGUMENT;
}

stq_status stq_solution_violations(const stq_solution* solution, char** out) {
    if (!solution || !out) return STQ_ERROR_INVALID_ARGUMENT;
    std::string joined;
    for (const std::string& v : solution->tree.violations) {
        joined += v;
        joined += "\n";
    }
    *out = copy_string(joined);
    return *out ? STQ_OK : STQ_ERROR_INVALID_ARGUMENT;
}

stq_status stq_oracle_solve(stq_problem_kind kind, const stq_graph* graph,
                            const stq_build_params* params, double* objective, char* errbuf,
                            size_t errbuf_size) {
    if (!graph || !objective) {
        set_error(errbuf, errbuf_size, "null argument");
        return STQ_ERROR_INVALID_ARGUMENT;
    }
    try {
        stq::ProblemSpec spec = make_spec(kind, graph->graph, params);
        auto result = stq::oracle_solve(spec);
        if (!result) {
            set_error(errbuf, errbuf_size, "no feasible solution");
            return STQ_INFEASIBLE;
        }
        *objective = *result;
        return STQ_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_size, e.what());
        return classify(e);
    }
}

} // extern "C"
