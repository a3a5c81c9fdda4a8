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

// Command-line front end. Talks to the library exclusively through the
// public C API, so it doubles as a smoke test of the shared-library surface.
//
// Exit codes: 0 success/valid, 1 usage or I/O error, 2 infeasible or invalid
// solution, 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "stqubo.h"

namespace {

constexpr size_t kErrbufSize = 512;

struct GraphDeleter {
    void operator()(stq_graph* g) const { stq_graph_free(g); }
};
struct ProblemDeleter {
    void operator()(stq_problem* p) const { stq_problem_free(p); }
};
struct SolutionDeleter {
    void operator()(stq_solution* s) const { stq_solution_free(s); }
};
using GraphPtr = std::unique_ptr<stq_graph, GraphDeleter>;
using ProblemPtr = std::unique_ptr<stq_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<stq_solution, SolutionDeleter>;

std::string owned_string(stq_status (*getter)(const stq_problem*, char**), const stq_problem* p) {
    char* raw = nullptr;
    if (getter(p, &raw) != STQ_OK || !raw) return {};
    std::string out(raw);
    stq_string_free(raw);
    return out;
}

struct CommonArgs {
    std::string problem;
    std::string graph_path;
    int k = 0;
    int delta = 0;
    double lambda_a = 0.0;
    double lambda_b = 0.0;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("problem", args.problem, "one of kmst, dcmst, minleaf, maxleaf")
        ->required()
        ->check(CLI::IsMember({"kmst", "dcmst", "minleaf", "maxleaf"}));
    cmd->add_option("graph", args.graph_path, "edge-list graph file")->required();
    cmd->add_option("-k,--k", args.k, "tree size for kmst");
    cmd->add_option("-d,--delta", args.delta, "degree bound for dcmst");
    cmd->add_option("--lambda-a", args.lambda_a, "constraint penalty override");
    cmd->add_option("--lambda-b", args.lambda_b, "objective scale (default 1)");
}

stq_problem_kind parse_kind(const std::string& name) {
    if (name == "kmst") return STQ_PROBLEM_KMST;
    if (name == "dcmst") return STQ_PROBLEM_DCMST;
    if (name == "minleaf") return STQ_PROBLEM_MIN_LEAF;
    return STQ_PROBLEM_MAX_LEAF;
}

int load_graph(const CommonArgs& args, GraphPtr& graph) {
    char errbuf[kErrbufSize] = {};
    stq_graph* raw = nullptr;
    if (stq_graph_read_file(args.graph_path.c_str(), &raw, errbuf, sizeof errbuf) != STQ_OK) {
        std::fprintf(stderr, "error: %s\n", errbuf);
        return 1;
    }
    graph.reset(raw);
    return 0;
}

int build_problem(const CommonArgs& args, const GraphPtr& graph, ProblemPtr& problem) {
    if (args.problem == "kmst" && args.k < 1) {
        std::fprintf(stderr, "error: kmst needs -k\n");
        return 1;
    }
    if (args.problem == "dcmst" && args.delta < 1) {
        std::fprintf(stderr, "error: dcmst needs --delta\n");
        return 1;
    }
    if ((args.problem == "minleaf" || args.problem == "maxleaf") &&
        !stq_graph_has_uniform_weights(graph.get()))
        std::fprintf(stderr, "warning: edge weights are ignored for leaf-count objectives\n");
    const stq_build_params params{args.k, args.delta, args.lambda_a, args.lambda_b};
    char errbuf[kErrbufSize] = {};
    stq_problem* raw = nullptr;
    if (stq_problem_build(parse_kind(args.problem), graph.get(), &params, &raw, errbuf,
                          sizeof errbuf) != STQ_OK) {
        std::fprintf(stderr, "error: %s\n", errbuf);
        return 1;
    }
    problem.reset(raw);
    return 0;
}

// "out.qubo" -> "out.layout.json"
std::string sidecar_path(const std::string& output) {
    const size_t dot = output.find_last_of('.');
    const size_t slash = output.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? output.substr(0, dot) : output) + ".layout.json";
}

int write_file(const std::string& path, const std::string& content) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return 1;
    }
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
    return 0;
}

struct SolverArgs {
    std::string solver = "auto";
    stq_anneal_params anneal{0, 0, 0.0, 0.0, 1, 0};
};

void add_solver_options(CLI::App* cmd, SolverArgs& args) {
    cmd->add_option("--solver", args.solver, "exhaustive, anneal, structured or auto")
        ->check(CLI::IsMember({"exhaustive", "anneal", "structured", "auto"}));
    cmd->add_option("--sweeps", args.anneal.sweeps, "annealing sweeps per restart");
    cmd->add_option("--restarts", args.anneal.restarts, "annealing restarts");
    cmd->add_option("--beta-initial", args.anneal.beta_initial, "initial inverse temperature");
    cmd->add_option("--beta-final", args.anneal.beta_final, "final inverse temperature");
    cmd->add_option("--seed", args.anneal.seed, "annealing seed");
    cmd->add_option("--threads", args.anneal.threads, "annealing worker threads (0 = auto)");
}

// exhaustive when it fits, annealing otherwise
stq_solver_kind pick_solver(const SolverArgs& args, const ProblemPtr& problem) {
    if (args.solver == "exhaustive") return STQ_SOLVER_EXHAUSTIVE;
    if (args.solver == "anneal") return STQ_SOLVER_ANNEAL;
    if (args.solver == "structured") return STQ_SOLVER_STRUCTURED;
    return stq_problem_num_variables(problem.get()) <= 26 ? STQ_SOLVER_EXHAUSTIVE
                                                          : STQ_SOLVER_ANNEAL;
}

const char* solver_name(stq_solver_kind kind) {
    switch (kind) {
        case STQ_SOLVER_EXHAUSTIVE: return "exhaustive";
        case STQ_SOLVER_ANNEAL: return "anneal";
        case STQ_SOLVER_STRUCTURED: return "structured";
    }
    return "unknown";
}

// Returns 0 and a solution, 2 when no encoding exists (solution stays null),
// 1 on hard errors.
int run_solver(const ProblemPtr& problem, const SolverArgs& args, stq_solver_kind kind,
               SolutionPtr& solution) {
    char errbuf[kErrbufSize] = {};
    stq_solution* raw = nullptr;
    const stq_status status =
        stq_solve(problem.get(), kind, &args.anneal, &raw, errbuf, sizeof errbuf);
    if (status == STQ_INFEASIBLE) return 2;
    if (status != STQ_OK) {
        std::fprintf(stderr, "error: %s\n", errbuf);
        return 1;
    }
    solution.reset(raw);
    return 0;
}

int cmd_formulate(const CommonArgs& args, const std::string& output) {
    GraphPtr graph;
    if (int rc = load_graph(args, graph)) return rc;
    ProblemPtr problem;
    if (int rc = build_problem(args, graph, problem)) return rc;

    const std::string qubo = owned_string(stq_problem_qubo_text, problem.get());
    if (output.empty()) {
        std::fputs(qubo.c_str(), stdout);
        return 0;
    }
    if (int rc = write_file(output, qubo)) return rc;
    const std::string layout_path = sidecar_path(output);
    if (int rc = write_file(layout_path, owned_string(stq_problem_layout_json, problem.get())))
        return rc;
    std::printf("wrote %s (%d variables)\n", output.c_str(),
                stq_problem_num_variables(problem.get()));
    std::printf("wrote %s\n", layout_path.c_str());
    return 0;
}

int cmd_solve(const CommonArgs& args, const SolverArgs& solver_args) {
    GraphPtr graph;
    if (int rc = load_graph(args, graph)) return rc;
    ProblemPtr problem;
    if (int rc = build_problem(args, graph, problem)) return rc;

    const stq_solver_kind kind = pick_solver(solver_args, problem);
    SolutionPtr solution;
    const int rc = run_solver(problem, solver_args, kind, solution);
    if (rc == 1) return 1;
    std::printf("solver %s\n", solver_name(kind));
    if (rc == 2) {
        std::printf("infeasible\n");
        return 2;
    }

    std::printf("energy %g\n", stq_solution_energy(solution.get()));
    char* text = nullptr;
    if (stq_solution_text(solution.get(), &text) == STQ_OK && text) {
        std::fputs(text, stdout);
        stq_string_free(text);
    }
    if (!stq_solution_is_valid(solution.get())) {
        char* violations = nullptr;
        if (stq_solution_violations(solution.get(), &violations) == STQ_OK && violations) {
            std::fputs(violations, stderr);
            stq_string_free(violations);
        }
        return 2;
    }
    return 0;
}

int cmd_verify(const CommonArgs& args, const SolverArgs& solver_args) {
    GraphPtr graph;
    if (int rc = load_graph(args, graph)) return rc;
    ProblemPtr problem;
    if (int rc = build_problem(args, graph, problem)) return rc;

    const stq_solver_kind kind = pick_solver(solver_args, problem);
    SolutionPtr solution;
    const int solver_rc = run_solver(problem, solver_args, kind, solution);
    if (solver_rc == 1) return 1;
    const bool solver_feasible =
        solver_rc == 0 && solution && stq_solution_is_valid(solution.get());
    const double solver_objective =
        solver_feasible ? stq_solution_objective(solution.get()) : 0.0;

    const stq_build_params params{args.k, args.delta, args.lambda_a, args.lambda_b};
    char errbuf[kErrbufSize] = {};
    double oracle_objective = 0.0;
    const stq_status oracle_status =
        stq_oracle_solve(parse_kind(args.problem), graph.get(), &params, &oracle_objective,
                         errbuf, sizeof errbuf);
    if (oracle_status != STQ_OK && oracle_status != STQ_INFEASIBLE) {
        std::fprintf(stderr, "error: %s\n", errbuf);
        return 1;
    }
    const bool oracle_feasible = oracle_status == STQ_OK;

    if (solver_feasible)
        std::printf("solver objective: %g\n", solver_objective);
    else
        std::printf("solver objective: infeasible\n");
    if (oracle_feasible)
        std::printf("oracle objective: %g\n", oracle_objective);
    else
        std::printf("oracle objective: infeasible\n");

    bool pass = false;
    if (solver_feasible && oracle_feasible) {
        const double scale = std::max({1.0, std::abs(solver_objective), std::abs(oracle_objective)});
        pass = std::abs(solver_objective - oracle_objective) <= 1e-9 * scale;
    } else {
        pass = solver_feasible == oracle_feasible;
    }

    char solver_buf[64], oracle_buf[64];
    if (solver_feasible)
        std::snprintf(solver_buf, sizeof solver_buf, "%g", solver_objective);
    else
        std::snprintf(solver_buf, sizeof solver_buf, "infeasible");
    if (oracle_feasible)
        std::snprintf(oracle_buf, sizeof oracle_buf, "%g", oracle_objective);
    else
        std::snprintf(oracle_buf, sizeof oracle_buf, "infeasible");
    std::printf("%s (%s %s %s)\n", pass ? "PASS" : "FAIL", solver_buf, pass ? "=" : "!=",
                oracle_buf);
    return pass ? 0 : 3;
}

int cmd_stats(const CommonArgs& args) {
    GraphPtr graph;
    if (int rc = load_graph(args, graph)) return rc;
    ProblemPtr problem;
    if (int rc = build_problem(args, graph, problem)) return rc;

    const int built = stq_problem_num_variables(problem.get());
    const long long formula = stq_problem_formula_num_variables(problem.get());
    std::printf("variables %d (formula %lld)\n", built, formula);
    std::printf("linear terms %d\n", stq_problem_num_linear_terms(problem.get()));
    std::printf("quadratic terms %d\n", stq_problem_num_quadratic_terms(problem.get()));
    std::printf("lambda_a %g\n", stq_problem_lambda_a(problem.get()));
    std::printf("lambda_b %g\n", stq_problem_lambda_b(problem.get()));
    if (static_cast<long long>(built) != formula) {
        std::fprintf(stderr, "FAIL: constructed variable count differs from the closed form\n");
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning tree problems as QUBO models"};
    app.require_subcommand(1);

    CommonArgs formulate_args;
    std::string output;
    CLI::App* formulate = app.add_subcommand(
        "formulate", "build a model and export QUBO text plus a layout sidecar");
    add_common_options(formulate, formulate_args);
    formulate->add_option("-o,--output", output,
                          "output path for the QUBO file (stdout when omitted)");

    CommonArgs solve_args;
    SolverArgs solve_solver;
    CLI::App* solve = app.add_subcommand("solve", "solve a problem and decode the tree");
    add_common_options(solve, solve_args);
    add_solver_options(solve, solve_solver);

    CommonArgs verify_args;
    SolverArgs verify_solver;
    CLI::App* verify =
        app.add_subcommand("verify", "solve and compare against the brute-force oracle");
    add_common_options(verify, verify_args);
    add_solver_options(verify, verify_solver);

    CommonArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "report model size and term counts");
    add_common_options(stats, stats_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (formulate->parsed()) return cmd_formulate(formulate_args, output);
    if (solve->parsed()) return cmd_solve(solve_args, solve_solver);
    if (verify->parsed()) return cmd_verify(verify_args, verify_solver);
    if (stats->parsed()) return cmd_stats(stats_args);
    return 1;
}
