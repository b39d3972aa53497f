#ifndef BINROUTE_CHROMOSOME_HPP
#define BINROUTE_CHROMOSOME_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "binroute/common.hpp"
#include "binroute/instance.hpp"
#include "binroute/schedule.hpp"

namespace binroute {

// Mixed encoding of a candidate plan: one visiting order per day plus a
// visit mask. Masked-out points are skipped in the day's order.
struct Chromosome {
    std::vector<std::vector<int>> day_order;  // [day] = permutation of point ids 1..n
    BoolMat visit;                            // n_points x n_days

    bool operator==(const Chromosome& other) const {
        return day_order == other.day_order && visit == other.visit;
    }
};

inline bool is_permutation_of_points(const std::vector<int>& row, int n_points) {
    if (static_cast<int>(row.size()) != n_points) return false;
    std::vector<uint8_t> seen(n_points + 1, 0);
    for (int p : row) {
        if (p < 1 || p > n_points || seen[p]) return false;
        seen[p] = 1;
    }
    return true;
}

inline void validate_chromosome(const Chromosome& c, const Instance& instance,
                                const Horizon& horizon) {
    if (static_cast<int>(c.day_order.size()) != horizon.n_days)
        throw Error("chromosome: day count mismatch");
    for (const auto& row : c.day_order)
        if (!is_permutation_of_points(row, instance.n_points))
            throw Error("chromosome: day order is not a permutation");
    if (c.visit.rows() != instance.n_points || c.visit.cols() != horizon.n_days)
        throw Error("chromosome: mask shape mismatch");
    for (int t = 0; t < horizon.n_days; ++t)
        if (horizon.is_rest(t))
            for (int i = 0; i < instance.n_points; ++i)
                if (c.visit(i, t)) throw Error("chromosome: visit on rest day");
}

// Adds visits (never removes) until every point is visited on a working day
// and no cyclic gap lets the accumulation outgrow the largest catalog
// capacity. Gaps are closed at the latest working day before the overflow,
// so the number of added visits is minimal for the scan order. Deterministic
// and idempotent.
inline Chromosome repair(const Chromosome& chromosome, const Instance& instance,
                         const Horizon& horizon, const BinCatalog& catalog) {
    Chromosome out = chromosome;
    const int n = instance.n_points;
    const int days = horizon.n_days;
    const double cap_max = catalog.max_capacity();

    for (int i = 0; i < n; ++i) {
        const double w = instance.daily_waste[i];
        // Widest gap a visit schedule may leave for this point.
        const int max_gap = static_cast<int>(std::floor((cap_max + kWasteTol) / w));
        if (max_gap < horizon.max_rest_run() + 1) throw UnservablePointError(i + 1);

        bool any = false;
        for (int t = 0; t < days; ++t) any = any || out.visit(i, t);
        if (!any) {
            int last_working = -1;
            for (int t = days - 1; t >= 0; --t)
                if (!horizon.is_rest(t)) {
                    last_working = t;
                    break;
                }
            out.visit(i, last_working) = 1;
        }

        // Repeatedly split the widest offending cyclic gap.
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> visits;
            for (int t = 0; t < days; ++t)
                if (out.visit(i, t)) visits.push_back(t);
            for (size_t k = 0; k < visits.size() && !changed; ++k) {
                const int from = visits[k];
                const int to = visits[(k + 1) % visits.size()];
                const int gap = (to - from + days - 1) % days + 1;
                if (gap <= max_gap) continue;
                // Latest working day within reach of the gap start.
                for (int off = max_gap; off >= 1; --off) {
                    const int day = (from + off) % days;
                    if (!horizon.is_rest(day) && !out.visit(i, day)) {
                        out.visit(i, day) = 1;
                        changed = true;
                        break;
                    }
                }
                if (!changed) throw UnservablePointError(i + 1);
            }
        }
    }
    return out;
}

// Cheapest combination that holds the peak accumulation. Cost ties discard a
// combination only when a larger one saves a material amount of service time
// per visit (more than half a minute); the smallest surviving capacity wins.
inline constexpr double kServiceDominanceMargin = 0.5;

inline int select_bin(double w_max, const BinCatalog& catalog) {
    std::vector<int> feasible;
    for (int b = 0; b < catalog.size(); ++b)
        if (catalog.at(b).capacity_m3 + kWasteTol >= w_max) feasible.push_back(b);
    if (feasible.empty()) throw Error("select_bins: capacity exceeded");

    double best_cost = std::numeric_limits<double>::infinity();
    for (int b : feasible) best_cost = std::min(best_cost, catalog.at(b).cost_horizon);
    std::vector<int> tied;
    for (int b : feasible)
        if (catalog.at(b).cost_horizon <= best_cost + kCostTol) tied.push_back(b);

    std::vector<int> kept;
    for (int b : tied) {
        bool dominated = false;
        for (int other : tied) {
            if (other == b) continue;
            if (catalog.at(other).capacity_m3 > catalog.at(b).capacity_m3 + kWasteTol &&
                catalog.at(b).service_minutes - catalog.at(other).service_minutes >
                    kServiceDominanceMargin) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(b);
    }

    int best = kept.front();
    for (int b : kept) {
        const BinCombo& cand = catalog.at(b);
        const BinCombo& cur = catalog.at(best);
        if (cand.capacity_m3 < cur.capacity_m3 - kWasteTol ||
            (std::abs(cand.capacity_m3 - cur.capacity_m3) <= kWasteTol &&
             cand.service_minutes < cur.service_minutes - kCostTol))
            best = b;
    }
    return best;
}

inline std::vector<int> select_bins(const std::vector<double>& w_max,
                                    const BinCatalog& catalog) {
    std::vector<int> assignment;
    assignment.reserve(w_max.size());
    for (double w : w_max) assignment.push_back(select_bin(w, catalog));
    return assignment;
}

// Greedy capacity split: walk the day's order, skip masked-out points, and
// start a new route whenever the next pickup would overflow the vehicle.
inline std::vector<Route> split_routes(const std::vector<int>& day_order,
                                       const BoolMat& visit, int day,
                                       const Matrix& accumulation, const FleetParams& fleet) {
    std::vector<Route> routes;
    Route current;
    double load = 0.0;
    for (int point : day_order) {
        if (!visit(point - 1, day)) continue;
        const double pickup = accumulation(point - 1, day);
        if (pickup > fleet.vehicle_capacity + kWasteTol)
            throw Error("split_routes: pickup at point " + std::to_string(point) +
                        " exceeds vehicle capacity");
        if (load + pickup > fleet.vehicle_capacity + kWasteTol) {
            routes.push_back(std::move(current));
            current = Route{};
            load = 0.0;
        }
        current.push_back(point);
        load += pickup;
    }
    if (!current.empty()) routes.push_back(std::move(current));
    return routes;
}

// Chromosome -> Schedule. Deterministic; expects a repaired chromosome.
inline Schedule decode(const Chromosome& chromosome, const Instance& instance,
                       const Horizon& horizon, const BinCatalog& catalog,
                       const FleetParams& fleet) {
    const Accumulation acc = accumulate_waste(chromosome.visit, instance, horizon);

    Schedule s;
    s.accumulation = acc.w;
    s.w_max = acc.w_max;
    s.bin_assignment = select_bins(acc.w_max, catalog);
    s.routes.resize(horizon.n_days);
    s.loads.resize(horizon.n_days);
    s.route_times.resize(horizon.n_days);

    for (int t = 0; t < horizon.n_days; ++t) {
        if (horizon.is_rest(t)) continue;
        s.routes[t] = split_routes(chromosome.day_order[t], chromosome.visit, t,
                                   acc.w, fleet);
        for (const Route& route : s.routes[t]) {
            s.loads[t].push_back(route_loads(route, acc.w, t, fleet).cumulative);
            s.route_times[t].push_back(
                route_time(route, s.bin_assignment, instance, catalog, fleet));
        }
    }
    return s;
}

// Schedule -> Chromosome: concatenated route orders per day, unvisited points
// appended in ascending id order. Greedy re-splitting reproduces any schedule
// whose routes were built by split_routes.
inline Chromosome encode(const Schedule& schedule, const Instance& instance,
                         const Horizon& horizon) {
    const int n = instance.n_points;
    Chromosome c;
    c.visit = BoolMat(n, horizon.n_days);
    c.day_order.resize(horizon.n_days);
    for (int t = 0; t < horizon.n_days; ++t) {
        std::vector<int>& order = c.day_order[t];
        for (const Route& route : schedule.routes[t])
            for (int point : route) {
                order.push_back(point);
                c.visit(point - 1, t) = 1;
            }
        for (int point = 1; point <= n; ++point)
            if (!c.visit(point - 1, t)) order.push_back(point);
    }
    return c;
}

}  // namespace binroute

#endif
