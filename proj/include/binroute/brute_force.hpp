#ifndef BINROUTE_BRUTE_FORCE_HPP
#define BINROUTE_BRUTE_FORCE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "binroute/chromosome.hpp"
#include "binroute/common.hpp"
#include "binroute/instance.hpp"
#include "binroute/schedule.hpp"

namespace binroute {

struct OracleResult {
    Schedule schedule;
    double cost = 0.0;
    uint64_t masks_examined = 0;
};

// Exhaustive minimum over the mixed-encoding solution space: every visit
// mask (pruned by the cyclic-accumulation capacity bound) crossed with every
// per-day visiting order, split greedily by vehicle capacity exactly like the
// decoder, with bins chosen by the same catalog rule. Route count and shift
// length are hard constraints here. Only desk-scale instances are accepted;
// the state estimate is capped.
inline OracleResult brute_force(const Instance& instance, const Horizon& horizon,
                                const BinCatalog& catalog, const FleetParams& fleet,
                                uint64_t max_states = 100000000ULL) {
    const int n = instance.n_points;
    const std::vector<int> working = horizon.working_day_list();
    const int bits = n * static_cast<int>(working.size());

    if (bits >= 63) throw Error("brute_force: instance too large");
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    const double estimate = std::ldexp(static_cast<double>(working.size()) * factorial, bits);
    if (estimate > static_cast<double>(max_states))
        throw Error("brute_force: instance too large (state estimate exceeds cap)");

    const double cap_max = catalog.max_capacity();
    OracleResult result;
    result.cost = std::numeric_limits<double>::infinity();

    for (uint64_t mask_bits = 0; mask_bits < (1ULL << bits); ++mask_bits) {
        ++result.masks_examined;
        BoolMat visit(n, horizon.n_days);
        bool all_visited = true;
        for (int i = 0; i < n; ++i) {
            bool any = false;
            for (size_t k = 0; k < working.size(); ++k) {
                if (mask_bits >> (i * working.size() + k) & 1ULL) {
                    visit(i, working[k]) = 1;
                    any = true;
                }
            }
            all_visited = all_visited && any;
        }
        if (!all_visited) continue;

        const Accumulation acc = accumulate_waste(visit, instance, horizon);
        bool capacity_ok = true;
        for (int i = 0; i < n && capacity_ok; ++i)
            capacity_ok = acc.w_max[i] <= cap_max + kWasteTol;
        for (int i = 0; i < n && capacity_ok; ++i)
            for (int t = 0; t < horizon.n_days && capacity_ok; ++t)
                capacity_ok = acc.w(i, t) <= fleet.vehicle_capacity + kWasteTol;
        if (!capacity_ok) continue;

        const std::vector<int> bins = select_bins(acc.w_max, catalog);
        double bin_cost = 0.0;
        for (int b : bins) bin_cost += catalog.at(b).cost_horizon;
        if (bin_cost >= result.cost) continue;

        double total = bin_cost;
        std::vector<std::vector<Route>> best_routes(horizon.n_days);
        bool feasible = true;
        for (int t : working) {
            std::vector<int> visited_points;
            for (int i = 0; i < n; ++i)
                if (visit(i, t)) visited_points.push_back(i + 1);
            if (visited_points.empty()) continue;

            double best_day = std::numeric_limits<double>::infinity();
            std::vector<Route> best_day_routes;
            std::vector<int> order = visited_points;
            do {
                const std::vector<Route> routes =
                    split_routes(order, visit, t, acc.w, fleet);
                if (static_cast<int>(routes.size()) > fleet.n_vehicles) continue;
                double day_time = 0.0;
                bool ok = true;
                for (const Route& route : routes) {
                    const double tt = route_time(route, bins, instance, catalog, fleet);
                    if (tt > fleet.shift_minutes + kCostTol) {
                        ok = false;
                        break;
                    }
                    day_time += tt;
                }
                if (ok && day_time < best_day) {
                    best_day = day_time;
                    best_day_routes = routes;
                }
            } while (std::next_permutation(order.begin(), order.end()));

            if (best_day == std::numeric_limits<double>::infinity()) {
                feasible = false;
                break;
            }
            total += fleet.cost_per_minute * best_day;
            best_routes[t] = std::move(best_day_routes);
            if (total >= result.cost) {
                feasible = false;
                break;
            }
        }
        if (!feasible || total >= result.cost) continue;

        Schedule s;
        s.bin_assignment = bins;
        s.routes = std::move(best_routes);
        s.accumulation = acc.w;
        s.w_max = acc.w_max;
        s.loads.resize(horizon.n_days);
        s.route_times.resize(horizon.n_days);
        for (int t = 0; t < horizon.n_days; ++t)
            for (const Route& route : s.routes[t]) {
                s.loads[t].push_back(route_loads(route, acc.w, t, fleet).cumulative);
                s.route_times[t].push_back(route_time(route, bins, instance, catalog, fleet));
            }
        result.schedule = std::move(s);
        result.cost = total;
    }

    if (result.cost == std::numeric_limits<double>::infinity())
        throw Error("brute_force: no feasible solution");
    return result;
}

}  // namespace binroute

#endif
