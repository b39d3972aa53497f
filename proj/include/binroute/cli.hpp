#ifndef BINROUTE_CLI_HPP
#define BINROUTE_CLI_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "binroute/bench.hpp"
#include "binroute/brute_force.hpp"
#include "binroute/ga.hpp"
#include "binroute/io.hpp"
#include "binroute/lp.hpp"
#include "binroute/stats.hpp"
#include "binroute/svg.hpp"

namespace binroute::cli {

inline std::string default_instance_name(const std::string& time_path) {
    const auto parent = std::filesystem::path(time_path).parent_path().filename().string();
    return parent.empty() ? "instance" : parent;
}

struct ProblemArgs {
    std::string time_path;
    std::string waste_path;
    std::string config_path;  // empty -> defaults
    std::string name;         // empty -> derived from path
};

struct LoadedProblem {
    Problem problem;
    RunSetup setup;
    std::string name;
};

inline LoadedProblem load_problem(const ProblemArgs& args) {
    LoadedProblem lp;
    lp.name = args.name.empty() ? default_instance_name(args.time_path) : args.name;
    Instance instance = parse_instance(args.time_path, args.waste_path, lp.name);
    lp.setup = args.config_path.empty() ? RunSetup{} : load_run_config(args.config_path);
    lp.problem = make_problem(instance, lp.setup);
    return lp;
}

inline const char* day_label(int day, int n_days) {
    static const char* kWeek[] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
    if (n_days == 7 && day >= 0 && day < 7) return kWeek[day];
    static thread_local std::string buf;
    buf = "day " + std::to_string(day + 1);
    return buf.c_str();
}

inline void print_report(const Schedule& schedule, const EvalReport& report,
                         const Horizon& horizon, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "bin cost      %10.2f\nrouting cost  %10.2f\noverall cost  %10.2f\n",
                  report.bin_cost, report.routing_cost, report.overall_cost);
    out << line;
    for (int t = 0; t < horizon.n_days; ++t) {
        for (size_t r = 0; r < schedule.routes[t].size(); ++r) {
            out << day_label(t, horizon.n_days) << " R" << (r + 1) << " [";
            for (size_t k = 0; k < schedule.routes[t][r].size(); ++k)
                out << (k ? " " : "") << schedule.routes[t][r][k];
            std::snprintf(line, sizeof(line), "] %.2f min, load %.2f\n",
                          schedule.route_times[t][r], schedule.loads[t][r].back());
            out << line;
        }
    }
    if (report.feasible) {
        out << "feasible\n";
    } else {
        out << "INFEASIBLE:\n";
        for (const auto& v : report.violations) {
            out << "  constraint (" << v.constraint << ")";
            if (v.day >= 0) out << " on " << day_label(v.day, horizon.n_days);
            std::snprintf(line, sizeof(line), ", magnitude %.6f\n", v.magnitude);
            out << line;
        }
    }
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    ProblemArgs problem;
    std::optional<uint64_t> seed;
    std::string solution_out;  // default <name>.solution.json
    std::string history_out;   // empty -> skip
};

inline int cmd_solve(const SolveArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    GaConfig config = lp.setup.ga;
    if (args.seed) config.rng_seed = *args.seed;
    const GaResult result = ga_run(lp.problem, config);

    const SolutionFile file = make_solution_file(lp.name, config.rng_seed, config,
                                                 result.best.chromosome, lp.problem);
    const std::string path =
        args.solution_out.empty() ? lp.name + ".solution.json" : args.solution_out;
    write_solution(path, file);
    if (!args.history_out.empty()) write_history_csv(args.history_out, result.history);

    const EvalReport report = evaluate(result.best_schedule, lp.problem.instance,
                                       lp.problem.horizon, lp.problem.catalog, lp.problem.fleet);
    print_report(result.best_schedule, report, lp.problem.horizon, out);
    out << "solution written to " << path << "\n";
    return report.feasible ? 0 : 2;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
    ProblemArgs problem;
    int runs = 30;
    std::optional<uint64_t> seed;
    int threads = 0;
    std::string csv_out;
};

inline int cmd_bench(const BenchArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    GaConfig config = lp.setup.ga;
    if (args.seed) config.rng_seed = *args.seed;
    const BenchReport report = bench(lp.problem, config, args.runs, args.threads);

    char line[160];
    out << "seed        best      feasible  runtime(s)\n";
    for (const auto& run : report.runs) {
        std::snprintf(line, sizeof(line), "%-10llu %10.2f  %-8s %9.2f\n",
                      static_cast<unsigned long long>(run.seed), run.best_cost,
                      run.feasible ? "yes" : "no", run.runtime_seconds);
        out << line;
    }
    std::snprintf(line, sizeof(line),
                  "min %.2f  median %.2f  mean %.2f  stddev %.2f  feasible %d/%d\n",
                  report.cost_stats.min, report.cost_stats.median, report.cost_stats.mean,
                  report.cost_stats.stddev, report.feasible_count,
                  static_cast<int>(report.runs.size()));
    out << line;

    if (!args.csv_out.empty()) {
        std::ofstream csv(args.csv_out);
        if (!csv) throw Error("cannot write " + args.csv_out);
        csv << "seed,best_cost,feasible,runtime_seconds\n";
        for (const auto& run : report.runs) {
            std::snprintf(line, sizeof(line), "%llu,%.6f,%d,%.3f\n",
                          static_cast<unsigned long long>(run.seed), run.best_cost,
                          run.feasible ? 1 : 0, run.runtime_seconds);
            csv << line;
        }
    }
    return 0;
}

// --- tune ------------------------------------------------------------------

struct TuneArgs {
    ProblemArgs problem;
    int runs_per_cell = 30;
    std::optional<uint64_t> seed;
    int threads = 0;
    std::string csv_out;
    TuneGrid grid;
};

inline int cmd_tune(const TuneArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    GaConfig config = lp.setup.ga;
    if (args.seed) config.rng_seed = *args.seed;
    const TuneReport report = tune(lp.problem, config, args.grid, args.runs_per_cell,
                                   args.threads);

    char line[200];
    out << "crossover  rate   mutation  rate   mean        median      runtime(s)\n";
    for (const auto& cell : report.treatments) {
        std::snprintf(line, sizeof(line), "%-9s %5.2f  %-8s %5.2f  %10.2f  %10.2f  %9.3f\n",
                      to_string(cell.crossover_op).c_str(), cell.crossover_rate,
                      to_string(cell.mutation_op).c_str(), cell.mutation_rate,
                      cell.cost_stats.mean, cell.cost_stats.median, cell.mean_runtime_seconds);
        out << line;
    }
    out << report.treatments.size() << " treatments\n";
    for (const auto& test : report.factor_tests) {
        std::snprintf(line, sizeof(line), "%-18s H = %.4f  df = %d  p = %.6g\n",
                      test.factor.c_str(), test.kw.h, test.kw.df, test.kw.p_value);
        out << line;
    }

    if (!args.csv_out.empty()) {
        std::ofstream csv(args.csv_out);
        if (!csv) throw Error("cannot write " + args.csv_out);
        csv << "crossover,crossover_rate,mutation,mutation_rate,mean,median,min,stddev,"
               "mean_runtime_seconds\n";
        for (const auto& cell : report.treatments) {
            std::snprintf(line, sizeof(line), "%s,%.2f,%s,%.2f,%.6f,%.6f,%.6f,%.6f,%.3f\n",
                          to_string(cell.crossover_op).c_str(), cell.crossover_rate,
                          to_string(cell.mutation_op).c_str(), cell.mutation_rate,
                          cell.cost_stats.mean, cell.cost_stats.median, cell.cost_stats.min,
                          cell.cost_stats.stddev, cell.mean_runtime_seconds);
            csv << line;
        }
    }
    return 0;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
    ProblemArgs problem;
    std::string solution_path;        // decoded-solution JSON; may be empty when
                                      // only an assignment file is checked
    bool against_milp = false;
    std::string assignment_in;        // model-variable assignment to substitute
    std::string assignment_out;       // export the solution as an assignment file
};

inline int cmd_check(const CheckArgs& args, std::ostream& out) {
    if (args.solution_path.empty() && args.assignment_in.empty())
        throw Error("check: provide --solution and/or --assignment");
    LoadedProblem lp = load_problem(args.problem);

    // External solver output: a flat variable -> value map checked directly
    // against the exported model rows.
    if (!args.assignment_in.empty()) {
        const LpModel model = build_milp(lp.problem.instance, lp.problem.horizon,
                                         lp.problem.catalog, lp.problem.fleet);
        const auto violations = substitute_solution(model, read_assignment(args.assignment_in));
        out << "model substitution: " << violations.size() << " violated rows\n";
        for (size_t k = 0; k < violations.size() && k < 10; ++k)
            out << "  " << violations[k].constraint << " slack " << violations[k].slack << "\n";
        if (args.solution_path.empty()) return violations.empty() ? 0 : 2;
    }

    const SolutionFile file = read_solution(args.solution_path, lp.problem);
    const Schedule schedule = decode(file.chromosome, lp.problem.instance, lp.problem.horizon,
                                     lp.problem.catalog, lp.problem.fleet);
    const EvalReport report = evaluate(schedule, lp.problem.instance, lp.problem.horizon,
                                       lp.problem.catalog, lp.problem.fleet);
    print_report(schedule, report, lp.problem.horizon, out);

    if (args.against_milp || !args.assignment_out.empty()) {
        const LpModel model = build_milp(lp.problem.instance, lp.problem.horizon,
                                         lp.problem.catalog, lp.problem.fleet);
        const Assignment assignment =
            schedule_to_assignment(schedule, model, lp.problem.instance, lp.problem.horizon);
        if (!args.assignment_out.empty()) {
            write_assignment(args.assignment_out, assignment);
            out << "assignment written to " << args.assignment_out << "\n";
        }
        if (args.against_milp) {
            const auto violations = substitute_solution(model, assignment);
            out << "model substitution: " << violations.size() << " violated rows\n";
            for (size_t k = 0; k < violations.size() && k < 10; ++k)
                out << "  " << violations[k].constraint << " slack " << violations[k].slack
                    << "\n";
        }
    }
    return report.feasible ? 0 : 2;
}

// --- compare ---------------------------------------------------------------

struct CompareArgs {
    double a = 0.0;  // candidate (or overall cost for gap mode)
    double b = 0.0;  // reference (or lower bound for gap mode)
    bool gap = false;
};

inline int cmd_compare(const CompareArgs& args, std::ostream& out) {
    if (args.gap) {
        out << "optimality gap = " << format_percent(optimality_gap(args.a, args.b)) << "%\n";
    } else {
        out << "% dif = " << format_percent(percentage_difference(args.a, args.b)) << "%\n";
    }
    return 0;
}

// --- emit-lp ---------------------------------------------------------------

struct EmitLpArgs {
    ProblemArgs problem;
    std::string out_path;  // empty -> stdout
};

inline int cmd_emit_lp(const EmitLpArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    const std::string text = emit_milp(lp.problem.instance, lp.problem.horizon,
                                       lp.problem.catalog, lp.problem.fleet);
    if (args.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(args.out_path);
        if (!file) throw Error("cannot write " + args.out_path);
        file << text;
        out << "model written to " << args.out_path << "\n";
    }
    return 0;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
    ProblemArgs problem;
    uint64_t max_states = 100000000ULL;
    std::string solution_out;  // empty -> skip
};

inline int cmd_oracle(const OracleArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    const OracleResult result =
        brute_force(lp.problem.instance, lp.problem.horizon, lp.problem.catalog,
                    lp.problem.fleet, args.max_states);
    const EvalReport report = evaluate(result.schedule, lp.problem.instance, lp.problem.horizon,
                                       lp.problem.catalog, lp.problem.fleet);
    char line[80];
    std::snprintf(line, sizeof(line), "optimal cost %.6f (%llu masks examined)\n", result.cost,
                  static_cast<unsigned long long>(result.masks_examined));
    out << line;
    print_report(result.schedule, report, lp.problem.horizon, out);
    if (!args.solution_out.empty()) {
        const Chromosome chromosome =
            encode(result.schedule, lp.problem.instance, lp.problem.horizon);
        write_solution(args.solution_out, make_solution_file(lp.name, 0, lp.setup.ga,
                                                             chromosome, lp.problem));
    }
    return 0;
}

// --- render ----------------------------------------------------------------

struct RenderArgs {
    ProblemArgs problem;
    std::string solution_path;
    std::string out_dir = ".";
};

inline int cmd_render(const RenderArgs& args, std::ostream& out) {
    LoadedProblem lp = load_problem(args.problem);
    const SolutionFile file = read_solution(args.solution_path, lp.problem);
    const Schedule schedule = decode(file.chromosome, lp.problem.instance, lp.problem.horizon,
                                     lp.problem.catalog, lp.problem.fleet);
    const std::vector<std::string> svgs =
        render_routes(schedule, lp.problem.instance, lp.problem.horizon);
    const std::vector<int> working = lp.problem.horizon.working_day_list();
    std::filesystem::create_directories(args.out_dir);
    for (size_t k = 0; k < svgs.size(); ++k) {
        const std::string path =
            args.out_dir + "/routes_day" + std::to_string(working[k] + 1) + ".svg";
        std::ofstream svg(path);
        if (!svg) throw Error("cannot write " + path);
        svg << svgs[k];
        out << path << "\n";
    }
    return 0;
}

}  // namespace binroute::cli

#endif
