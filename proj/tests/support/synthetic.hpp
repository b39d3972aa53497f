// Seeded generators for small synthetic problems and chromosomes.
#ifndef BINROUTE_TESTS_SYNTHETIC_HPP
#define BINROUTE_TESTS_SYNTHETIC_HPP

#include <cstdint>

#include "binroute/chromosome.hpp"
#include "binroute/ga.hpp"
#include "binroute/instance.hpp"

namespace testdata {

// n-point instance with waste in [0.5, 1.5] m3/day, asymmetric travel in
// [1, 5] min and a 3-combination catalog with strictly increasing costs.
// Horizon: n_days with the last day resting. Fleet: 2 vehicles, Q = 6,
// 60-minute shifts.
binroute::Problem synthetic_problem(int n_points, int n_days, uint64_t seed);

// Large stand-in sized like the city-scale instance: waste in [1.0, 1.7],
// travel in [3, 12], week horizon, fleet from the derivation formulas.
binroute::Problem synthetic_city(int n_points, uint64_t seed);

binroute::Chromosome random_chromosome(const binroute::Problem& problem, uint64_t seed);

// Random visit mask with every point visited at least once on a working day.
binroute::BoolMat random_valid_mask(const binroute::Problem& problem, uint64_t seed);

}  // namespace testdata

#endif
