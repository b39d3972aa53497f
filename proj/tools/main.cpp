// Command line front end: solve, bench, tune, check, compare, emit-lp,
// oracle and render subcommands over time.txt/waste.txt instances.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "binroute/cli.hpp"

namespace {

void add_problem_options(CLI::App* cmd, binroute::cli::ProblemArgs& args) {
    cmd->add_option("--time", args.time_path, "travel time matrix (time.txt)")->required();
    cmd->add_option("--waste", args.waste_path, "coordinates and daily waste (waste.txt)")
        ->required();
    cmd->add_option("--config", args.config_path,
                    "run configuration file (default: $BINROUTE_CONFIG if set)");
    cmd->add_option("--name", args.name, "instance name (default: parent directory)");
}

void apply_config_env(binroute::cli::ProblemArgs& args) {
    if (!args.config_path.empty()) return;
    if (const char* env = std::getenv("BINROUTE_CONFIG")) args.config_path = env;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrated bin sizing and periodic waste collection routing"};
    app.require_subcommand(1);

    binroute::cli::SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "run the genetic algorithm on an instance");
    add_problem_options(solve, solve_args.problem);
    uint64_t solve_seed = 0;
    CLI::Option* solve_seed_opt = solve->add_option("--seed", solve_seed, "override RNG seed");
    solve->add_option("--out", solve_args.solution_out, "solution JSON path");
    solve->add_option("--history", solve_args.history_out, "per-generation CSV path");

    binroute::cli::BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "independent seeded GA runs with aggregates");
    add_problem_options(bench, bench_args.problem);
    uint64_t bench_seed = 0;
    CLI::Option* bench_seed_opt = bench->add_option("--seed", bench_seed, "base RNG seed");
    bench->add_option("--runs", bench_args.runs, "number of runs")->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_args.threads, "worker threads (0 = hardware)");
    bench->add_option("--csv", bench_args.csv_out, "per-run CSV path");

    binroute::cli::TuneArgs tune_args;
    CLI::App* tune = app.add_subcommand("tune", "factorial sweep over operators and rates");
    add_problem_options(tune, tune_args.problem);
    uint64_t tune_seed = 0;
    CLI::Option* tune_seed_opt = tune->add_option("--seed", tune_seed, "base RNG seed");
    tune->add_option("--runs-per-cell", tune_args.runs_per_cell, "runs per treatment")
        ->check(CLI::PositiveNumber);
    tune->add_option("--threads", tune_args.threads, "worker threads (0 = hardware)");
    tune->add_option("--csv", tune_args.csv_out, "treatment CSV path");

    binroute::cli::CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "validate a solution file against an instance");
    add_problem_options(check, check_args.problem);
    check->add_option("--solution", check_args.solution_path, "solution JSON");
    check->add_flag("--milp", check_args.against_milp,
                    "also substitute the solution into the exported model");
    check->add_option("--assignment", check_args.assignment_in,
                      "model-variable assignment JSON to substitute (external solver output)");
    check->add_option("--export-assignment", check_args.assignment_out,
                      "write the solution as a model-variable assignment JSON");

    binroute::cli::CompareArgs compare_args;
    CLI::App* compare = app.add_subcommand("compare", "percentage difference or optimality gap");
    compare->add_option("a", compare_args.a, "candidate cost (or overall cost with --gap)")
        ->required();
    compare->add_option("b", compare_args.b, "reference cost (or lower bound with --gap)")
        ->required();
    compare->add_flag("--gap", compare_args.gap, "compute |a - b| / |a| instead of (a - b) / b");

    binroute::cli::EmitLpArgs emit_args;
    CLI::App* emit = app.add_subcommand("emit-lp", "export the linearized model in LP format");
    add_problem_options(emit, emit_args.problem);
    emit->add_option("--out", emit_args.out_path, "output path (default: stdout)");

    binroute::cli::OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum for tiny instances");
    add_problem_options(oracle, oracle_args.problem);
    oracle->add_option("--max-states", oracle_args.max_states, "enumeration cap");
    oracle->add_option("--out", oracle_args.solution_out, "write the optimum as a solution file");

    binroute::cli::RenderArgs render_args;
    CLI::App* render = app.add_subcommand("render", "SVG route plots, one per working day");
    add_problem_options(render, render_args.problem);
    render->add_option("--solution", render_args.solution_path, "solution JSON")->required();
    render->add_option("--out-dir", render_args.out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            apply_config_env(solve_args.problem);
            if (*solve_seed_opt) solve_args.seed = solve_seed;
            return binroute::cli::cmd_solve(solve_args, std::cout);
        }
        if (*bench) {
            apply_config_env(bench_args.problem);
            if (*bench_seed_opt) bench_args.seed = bench_seed;
            return binroute::cli::cmd_bench(bench_args, std::cout);
        }
        if (*tune) {
            apply_config_env(tune_args.problem);
            if (*tune_seed_opt) tune_args.seed = tune_seed;
            return binroute::cli::cmd_tune(tune_args, std::cout);
        }
        if (*check) {
            apply_config_env(check_args.problem);
            return binroute::cli::cmd_check(check_args, std::cout);
        }
        if (*compare) return binroute::cli::cmd_compare(compare_args, std::cout);
        if (*emit) {
            apply_config_env(emit_args.problem);
            return binroute::cli::cmd_emit_lp(emit_args, std::cout);
        }
        if (*oracle) {
            apply_config_env(oracle_args.problem);
            return binroute::cli::cmd_oracle(oracle_args, std::cout);
        }
        if (*render) {
            apply_config_env(render_args.problem);
            return binroute::cli::cmd_render(render_args, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
