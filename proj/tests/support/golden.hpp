// Worked twelve-point example: the published chromosome, its per-day visiting
// orders, masks, accumulation table, bin assignments, route compositions,
// cumulative loads and route durations. Used as golden decoding data.
#ifndef BINROUTE_TESTS_GOLDEN_HPP
#define BINROUTE_TESTS_GOLDEN_HPP

#include <string>
#include <vector>

#include "binroute/chromosome.hpp"
#include "binroute/ga.hpp"
#include "binroute/instance.hpp"

namespace testdata {

inline std::string data_dir() { return BINROUTE_DATA_DIR; }

// Bundled 12-point instance (time.txt / waste.txt).
binroute::Instance load_i12_1();

// Problem wrapper with the published fleet parameters: Q = 12, two vehicles,
// 8 min unload, derived shift length, week horizon with Sunday rest.
binroute::Problem i12_1_problem();

// The published feasible chromosome for the 12-point instance.
binroute::Chromosome golden_chromosome();

struct ExpectedRoute {
    int day;                        // 0 = Monday
    std::vector<int> points;
    std::vector<double> loads;      // cumulative, length points+1
    double minutes;
};

const std::vector<ExpectedRoute>& golden_routes();
const std::vector<int>& golden_bins();            // catalog index per point
const std::vector<double>& golden_w_max();        // per point
// Mon..Sat accumulation per point (the published table omits Sunday).
const std::vector<std::vector<double>>& golden_accumulation();

}  // namespace testdata

#endif
