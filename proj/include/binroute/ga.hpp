#ifndef BINROUTE_GA_HPP
#define BINROUTE_GA_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "binroute/chromosome.hpp"
#include "binroute/common.hpp"
#include "binroute/instance.hpp"
#include "binroute/operators.hpp"
#include "binroute/rng.hpp"
#include "binroute/schedule.hpp"

namespace binroute {

struct GaConfig {
    int population_size = 100;
    int generations = 1000;
    CrossoverOp crossover_op = CrossoverOp::CX;
    double crossover_rate = 0.8;
    MutationOp mutation_op = MutationOp::EM;
    double mutation_rate = 0.05;
    int elite_count = 2;
    double lambda = 100.0;   // weight of excess daily routes
    double gamma = 1000.0;   // weight of shift overruns, per minute
    uint64_t rng_seed = 1;

    void validate() const {
        if (population_size < 2 || population_size % 2 != 0)
            throw Error("population size must be even and at least 2");
        if (crossover_rate < 0.0 || crossover_rate > 1.0) throw Error("crossover rate not in [0,1]");
        if (mutation_rate < 0.0 || mutation_rate > 1.0) throw Error("mutation rate not in [0,1]");
        if (elite_count < 0 || elite_count > population_size) throw Error("bad elite count");
        if (lambda <= 0.0 || gamma <= 0.0) throw Error("penalty weights must be positive");
        if (generations < 0) throw Error("negative generation count");
    }
};

// Everything the GA needs to score a chromosome.
struct Problem {
    Instance instance;
    Horizon horizon;
    BinCatalog catalog;
    FleetParams fleet;
};

// Objective value plus penalties for excess daily routes and shift overruns.
inline double penalized_fitness(const EvalReport& report, const GaConfig& config,
                                const FleetParams& fleet) {
    double fitness = report.overall_cost;
    for (int excess : report.excess_routes)
        if (excess > 0)
            fitness += config.lambda * static_cast<double>(excess) / fleet.n_vehicles;
    for (const RouteOverrun& over : report.time_overruns)
        fitness += config.gamma * over.minutes;
    return fitness;
}

struct ScoredIndividual {
    Chromosome chromosome;
    double fitness = std::numeric_limits<double>::infinity();
    double cost = 0.0;
    bool feasible = false;
};

inline double fitness(const Chromosome& chromosome, const Problem& problem,
                      const GaConfig& config) {
    const Schedule schedule =
        decode(chromosome, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    const EvalReport report =
        evaluate(schedule, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    return penalized_fitness(report, config, problem.fleet);
}

// Binary tournament without replacement: two distinct individuals are
// sampled, the lower fitness wins (minimization).
inline int tournament_select(const std::vector<double>& fitnesses, Rng& rng) {
    const int n = static_cast<int>(fitnesses.size());
    const int a = rng.uniform_int(0, n - 1);
    int b = rng.uniform_int(0, n - 2);
    if (b >= a) ++b;
    return fitnesses[a] <= fitnesses[b] ? a : b;
}

struct GenerationStats {
    int generation = 0;
    double best = 0.0;  // best-ever fitness after this generation
    double mean = 0.0;  // mean fitness of the current population
    double feasible_fraction = 0.0;
};

struct GaResult {
    ScoredIndividual best;
    Schedule best_schedule;
    std::vector<GenerationStats> history;
};

namespace detail {

inline Chromosome random_chromosome(const Problem& problem, Rng& rng) {
    const int n = problem.instance.n_points;
    const int days = problem.horizon.n_days;
    Chromosome c;
    c.day_order.resize(days);
    c.visit = BoolMat(n, days);
    for (int t = 0; t < days; ++t) {
        c.day_order[t].resize(n);
        std::iota(c.day_order[t].begin(), c.day_order[t].end(), 1);
        std::shuffle(c.day_order[t].begin(), c.day_order[t].end(), rng.engine());
        if (!problem.horizon.is_rest(t))
            for (int i = 0; i < n; ++i) c.visit(i, t) = rng.bernoulli(0.5);
    }
    return c;
}

inline ScoredIndividual score(Chromosome chromosome, const Problem& problem,
                              const GaConfig& config) {
    const Schedule schedule =
        decode(chromosome, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    const EvalReport report =
        evaluate(schedule, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    ScoredIndividual out;
    out.chromosome = std::move(chromosome);
    out.fitness = penalized_fitness(report, config, problem.fleet);
    out.cost = report.overall_cost;
    out.feasible = report.feasible;
    return out;
}

inline GenerationStats population_stats(int generation, double best_ever,
                                        const std::vector<ScoredIndividual>& pop) {
    GenerationStats stats;
    stats.generation = generation;
    stats.best = best_ever;
    double sum = 0.0;
    int feasible = 0;
    for (const auto& ind : pop) {
        sum += ind.fitness;
        if (ind.feasible) ++feasible;
    }
    stats.mean = sum / static_cast<double>(pop.size());
    stats.feasible_fraction = static_cast<double>(feasible) / pop.size();
    return stats;
}

// Stream tags keeping init / selection / variation draws independent.
inline constexpr uint64_t kInitTag = 0x494e4954;
inline constexpr uint64_t kSelectTag = 0x53454c43;
inline constexpr uint64_t kVaryTag = 0x56415259;

}  // namespace detail

// Generational GA over the mixed encoding. Offspring are repaired at birth,
// so fitness always sees serviceable masks. Elites replace the worst
// offspring, keeping the population size constant. Fully reproducible from
// the seed: every stochastic step draws from a substream keyed by
// (seed, stage, generation, index).
inline GaResult ga_run(const Problem& problem, const GaConfig& config) {
    config.validate();
    const int n_pop = config.population_size;
    const std::vector<int> working = problem.horizon.working_day_list();
    const double mask_rate = 1.0 / problem.instance.n_points;

    GaResult result;
    result.best.fitness = std::numeric_limits<double>::infinity();

    std::vector<ScoredIndividual> pop;
    pop.reserve(n_pop);
    for (int k = 0; k < n_pop; ++k) {
        Rng rng(mix64(config.rng_seed, detail::kInitTag, static_cast<uint64_t>(k)));
        Chromosome c = detail::random_chromosome(problem, rng);
        c = repair(c, problem.instance, problem.horizon, problem.catalog);
        pop.push_back(detail::score(std::move(c), problem, config));
    }

    auto track_best = [&](const ScoredIndividual& ind) {
        if (ind.fitness < result.best.fitness) result.best = ind;
    };
    for (const auto& ind : pop) track_best(ind);

    auto elite_of = [&](const std::vector<ScoredIndividual>& from) {
        std::vector<int> idx(from.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::partial_sort(idx.begin(), idx.begin() + config.elite_count, idx.end(),
                          [&](int a, int b) { return from[a].fitness < from[b].fitness; });
        std::vector<ScoredIndividual> elites;
        for (int k = 0; k < config.elite_count; ++k) elites.push_back(from[idx[k]]);
        return elites;
    };

    std::vector<ScoredIndividual> elites = elite_of(pop);
    result.history.push_back(detail::population_stats(0, result.best.fitness, pop));

    for (int gen = 1; gen <= config.generations; ++gen) {
        std::vector<double> fitnesses(n_pop);
        for (int k = 0; k < n_pop; ++k) fitnesses[k] = pop[k].fitness;

        Rng select_rng(mix64(config.rng_seed, detail::kSelectTag, static_cast<uint64_t>(gen)));
        std::vector<int> parents(n_pop);
        for (int k = 0; k < n_pop; ++k) parents[k] = tournament_select(fitnesses, select_rng);

        std::vector<ScoredIndividual> offspring;
        offspring.reserve(n_pop);
        for (int pair = 0; pair < n_pop / 2; ++pair) {
            Rng rng(mix64(config.rng_seed, detail::kVaryTag,
                          (static_cast<uint64_t>(gen) << 20) | static_cast<uint64_t>(pair)));
            Chromosome child_a = pop[parents[2 * pair]].chromosome;
            Chromosome child_b = pop[parents[2 * pair + 1]].chromosome;

            if (rng.bernoulli(config.crossover_rate)) {
                for (size_t t = 0; t < child_a.day_order.size(); ++t) {
                    auto [ra, rb] = crossover_perm(child_a.day_order[t], child_b.day_order[t],
                                                   config.crossover_op, rng);
                    child_a.day_order[t] = std::move(ra);
                    child_b.day_order[t] = std::move(rb);
                }
                crossover_mask(child_a.visit, child_b.visit, working, rng);
            }
            for (Chromosome* child : {&child_a, &child_b}) {
                for (auto& row : child->day_order)
                    if (rng.bernoulli(config.mutation_rate))
                        mutate_perm(row, config.mutation_op, rng);
                mutate_mask(child->visit, working, mask_rate, rng);
                *child = repair(*child, problem.instance, problem.horizon, problem.catalog);
                offspring.push_back(detail::score(std::move(*child), problem, config));
            }
        }

        // Elitism: the saved elites replace the worst offspring.
        if (config.elite_count > 0) {
            std::vector<int> idx(offspring.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::partial_sort(idx.begin(), idx.begin() + config.elite_count, idx.end(),
                              [&](int a, int b) {
                                  return offspring[a].fitness > offspring[b].fitness;
                              });
            for (int k = 0; k < config.elite_count; ++k) offspring[idx[k]] = elites[k];
        }

        pop = std::move(offspring);
        for (const auto& ind : pop) track_best(ind);
        elites = elite_of(pop);
        result.history.push_back(detail::population_stats(gen, result.best.fitness, pop));
    }

    result.best_schedule = decode(result.best.chromosome, problem.instance, problem.horizon,
                                  problem.catalog, problem.fleet);
    return result;
}

}  // namespace binroute

#endif
