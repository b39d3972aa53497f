#ifndef BINROUTE_BENCH_HPP
#define BINROUTE_BENCH_HPP

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "binroute/ga.hpp"
#include "binroute/stats.hpp"

namespace binroute {

struct BenchRun {
    uint64_t seed = 0;
    double best_cost = 0.0;     // overall cost of the best individual
    double best_fitness = 0.0;  // includes penalties when infeasible
    bool feasible = false;
    double runtime_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRun> runs;  // ordered by seed
    SampleStats cost_stats;      // over best_cost of all runs
    int feasible_count = 0;
};

// Independent seeded runs seed+0..seed+runs-1, executed by a small worker
// pool. Results are deterministic per seed and reported in seed order.
inline BenchReport bench(const Problem& problem, const GaConfig& base_config, int runs,
                         int threads = 0) {
    if (runs < 1) throw Error("bench: need at least one run");
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    BenchReport report;
    report.runs.resize(runs);
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            const int idx = next.fetch_add(1);
            if (idx >= runs) return;
            GaConfig config = base_config;
            config.rng_seed = base_config.rng_seed + static_cast<uint64_t>(idx);
            const auto start = std::chrono::steady_clock::now();
            const GaResult result = ga_run(problem, config);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            report.runs[idx] = {config.rng_seed, result.best.cost, result.best.fitness,
                                result.best.feasible, elapsed.count()};
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < std::min(threads, runs); ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<double> costs;
    costs.reserve(runs);
    for (const auto& run : report.runs) {
        costs.push_back(run.best_cost);
        if (run.feasible) ++report.feasible_count;
    }
    report.cost_stats = summarize(std::move(costs));
    return report;
}

// ---------------------------------------------------------------------------
// Factor tuning: full crossing of the four operator/rate factors.

struct TuneGrid {
    std::vector<CrossoverOp> crossover_ops = {CrossoverOp::PMX, CrossoverOp::OX, CrossoverOp::CX,
                                              CrossoverOp::CX2};
    std::vector<double> crossover_rates = {0.8, 0.85, 0.9};
    std::vector<MutationOp> mutation_ops = {MutationOp::EM, MutationOp::IM, MutationOp::INM};
    std::vector<double> mutation_rates = {0.05, 0.10, 0.15};
};

struct Treatment {
    CrossoverOp crossover_op;
    double crossover_rate;
    MutationOp mutation_op;
    double mutation_rate;
    std::vector<double> costs;      // per run
    double mean_runtime_seconds = 0.0;
    SampleStats cost_stats;
};

struct FactorTest {
    std::string factor;
    KruskalWallisResult kw;
};

struct TuneReport {
    std::vector<Treatment> treatments;
    std::vector<FactorTest> factor_tests;  // F1..F4
};

inline TuneReport tune(const Problem& problem, const GaConfig& base_config, const TuneGrid& grid,
                       int runs_per_cell, int threads = 0) {
    if (runs_per_cell < 1) throw Error("tune: need at least one run per cell");
    TuneReport report;
    for (CrossoverOp f1 : grid.crossover_ops)
        for (double f2 : grid.crossover_rates)
            for (MutationOp f3 : grid.mutation_ops)
                for (double f4 : grid.mutation_rates)
                    report.treatments.push_back({f1, f2, f3, f4, {}, 0.0, {}});

    uint64_t seed = base_config.rng_seed;
    for (auto& cell : report.treatments) {
        GaConfig config = base_config;
        config.crossover_op = cell.crossover_op;
        config.crossover_rate = cell.crossover_rate;
        config.mutation_op = cell.mutation_op;
        config.mutation_rate = cell.mutation_rate;
        config.rng_seed = seed;
        seed += static_cast<uint64_t>(runs_per_cell);
        const BenchReport bench_report = bench(problem, config, runs_per_cell, threads);
        for (const auto& run : bench_report.runs) {
            cell.costs.push_back(run.best_cost);
            cell.mean_runtime_seconds += run.runtime_seconds / runs_per_cell;
        }
        cell.cost_stats = summarize(cell.costs);
    }

    // Rank test per factor, pooling every run of each level. Factors fixed to
    // a single level carry no test.
    auto index_of = [](const auto& vec, const auto& value) {
        for (size_t k = 0; k < vec.size(); ++k)
            if (vec[k] == value) return k;
        return size_t{0};
    };
    auto add_test = [&](const std::string& factor, auto level_of, size_t n_levels) {
        if (n_levels < 2) return;
        std::vector<std::vector<double>> groups(n_levels);
        for (const auto& cell : report.treatments) {
            const size_t level = level_of(cell);
            groups[level].insert(groups[level].end(), cell.costs.begin(), cell.costs.end());
        }
        report.factor_tests.push_back({factor, kruskal_wallis(groups)});
    };
    add_test("F1:crossover_op",
             [&](const Treatment& c) { return index_of(grid.crossover_ops, c.crossover_op); },
             grid.crossover_ops.size());
    add_test("F2:crossover_rate",
             [&](const Treatment& c) { return index_of(grid.crossover_rates, c.crossover_rate); },
             grid.crossover_rates.size());
    add_test("F3:mutation_op",
             [&](const Treatment& c) { return index_of(grid.mutation_ops, c.mutation_op); },
             grid.mutation_ops.size());
    add_test("F4:mutation_rate",
             [&](const Treatment& c) { return index_of(grid.mutation_rates, c.mutation_rate); },
             grid.mutation_rates.size());
    return report;
}

}  // namespace binroute

#endif
