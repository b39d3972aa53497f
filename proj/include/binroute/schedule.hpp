#ifndef BINROUTE_SCHEDULE_HPP
#define BINROUTE_SCHEDULE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "binroute/common.hpp"
#include "binroute/instance.hpp"

namespace binroute {

using Route = std::vector<int>;  // visited point ids, depot implicit at both ends

// A fully decoded weekly plan. Point i's row in accumulation/w_max is i-1.
// Route r of day t is driven by vehicle r+1; vehicle identity carries no cost.
struct Schedule {
    std::vector<int> bin_assignment;            // per point, catalog index
    std::vector<std::vector<Route>> routes;     // [day][route]
    Matrix accumulation;                        // n_points x n_days, end-of-day m3
    std::vector<double> w_max;                  // per point, peak accumulation
    std::vector<std::vector<std::vector<double>>> loads;  // [day][route], cumulative
    std::vector<std::vector<double>> route_times;         // [day][route], minutes
};

struct Violation {
    std::string constraint;  // "2a".."2m"
    int day = -1;            // 0-based, -1 when not day-scoped
    double magnitude = 0.0;
};

struct RouteOverrun {
    int day = 0;
    int route = 0;
    double minutes = 0.0;
};

struct EvalReport {
    double bin_cost = 0.0;
    double routing_cost = 0.0;
    double overall_cost = 0.0;
    std::vector<Violation> violations;
    std::vector<int> excess_routes;        // per day, max(0, routes - n_vehicles)
    std::vector<RouteOverrun> time_overruns;
    bool feasible = true;
};

// Total service time of one route: one unload on depot return, travel legs,
// and the emptying time of each visited point's assigned combination.
inline double route_time(const Route& route, const std::vector<int>& bin_assignment,
                         const Instance& instance, const BinCatalog& catalog,
                         const FleetParams& fleet) {
    if (route.empty()) throw Error("route_time: empty route");
    double total = fleet.unload_minutes;
    int prev = 0;
    for (int point : route) {
        if (point < 1 || point > instance.n_points)
            throw Error("route_time: unknown point " + std::to_string(point));
        const int bin = bin_assignment[point - 1];
        if (bin < 0 || bin >= catalog.size())
            throw Error("route_time: point " + std::to_string(point) + " has no bin assignment");
        total += instance.travel(prev, point) + catalog.at(bin).service_minutes;
        prev = point;
    }
    total += instance.travel(prev, 0);
    return total;
}

struct Accumulation {
    Matrix w;                   // n_points x n_days
    std::vector<double> w_max;  // per point
};

// Steady-state accumulation of the cyclic weekly plan: a point's level on day
// t equals its daily waste times the number of days elapsed since the most
// recent visit (in cyclic day order, counting day t itself and rest days).
inline Accumulation accumulate_waste(const BoolMat& visit, const Instance& instance,
                                     const Horizon& horizon) {
    const int n = instance.n_points;
    const int days = horizon.n_days;
    if (visit.rows() != n || visit.cols() != days)
        throw Error("accumulate_waste: mask shape mismatch");
    for (int t = 0; t < days; ++t)
        if (horizon.is_rest(t))
            for (int i = 0; i < n; ++i)
                if (visit(i, t)) throw Error("accumulate_waste: visit on a rest day");

    Accumulation acc{Matrix(n, days), std::vector<double>(n, 0.0)};
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int t = 0; t < days; ++t) any = any || visit(i, t);
        if (!any) throw UnvisitedPointError(i + 1);

        for (int t = 0; t < days; ++t) {
            int gap = 0;
            for (int back = 1; back <= days; ++back) {
                if (visit(i, ((t - back) % days + days) % days)) {
                    gap = back;
                    break;
                }
            }
            const double level = instance.daily_waste[i] * gap;
            acc.w(i, t) = level;
            acc.w_max[i] = std::max(acc.w_max[i], level);
        }
    }
    return acc;
}

struct LoadProfile {
    std::vector<double> cumulative;  // size route+1; [k] = load before serving k-th point
    bool overflow = false;           // some prefix plus the next pickup exceeds Q
};

inline LoadProfile route_loads(const Route& route, const Matrix& accumulation, int day,
                               const FleetParams& fleet) {
    LoadProfile prof;
    prof.cumulative.reserve(route.size() + 1);
    double load = 0.0;
    prof.cumulative.push_back(load);
    for (int point : route) {
        const double pickup = accumulation(point - 1, day);
        if (load + pickup > fleet.vehicle_capacity + kWasteTol) prof.overflow = true;
        load += pickup;
        prof.cumulative.push_back(load);
    }
    return prof;
}

namespace detail {

inline void check_schedule_structure(const Schedule& s, const Instance& instance,
                                     const Horizon& horizon) {
    const int n = instance.n_points;
    if (static_cast<int>(s.bin_assignment.size()) != n)
        throw Error("evaluate: bin assignment size mismatch");
    if (static_cast<int>(s.routes.size()) != horizon.n_days)
        throw Error("evaluate: route days mismatch");
    if (s.accumulation.rows() != n || s.accumulation.cols() != horizon.n_days)
        throw Error("evaluate: accumulation shape mismatch");
    if (static_cast<int>(s.w_max.size()) != n) throw Error("evaluate: w_max size mismatch");
    std::vector<int> seen(n, -1);
    for (int t = 0; t < horizon.n_days; ++t) {
        for (const Route& route : s.routes[t]) {
            if (route.empty()) throw Error("evaluate: empty route");
            for (int point : route) {
                if (point < 1 || point > n) throw Error("evaluate: unknown point in route");
                if (seen[point - 1] == t)
                    throw Error("evaluate: point visited twice on one day");
                seen[point - 1] = t;
            }
        }
    }
}

}  // namespace detail

// Cost and constraint report for a schedule. Structural schedule defects
// throw; constraint breaches are recorded as violations. Flow conservation
// and self-loop exclusion hold by construction of the route lists.
inline EvalReport evaluate(const Schedule& schedule, const Instance& instance,
                           const Horizon& horizon, const BinCatalog& catalog,
                           const FleetParams& fleet) {
    detail::check_schedule_structure(schedule, instance, horizon);

    const int n = instance.n_points;
    const int days = horizon.n_days;
    EvalReport report;
    report.excess_routes.assign(days, 0);

    // Visit matrix implied by the route lists.
    BoolMat visited(n, days);
    for (int t = 0; t < days; ++t)
        for (const Route& route : schedule.routes[t])
            for (int point : route) visited(point - 1, t) = 1;

    // Bin cost and one-combination-per-point (2b); the depot holds no
    // combination by construction (2a).
    for (int i = 0; i < n; ++i) {
        const int bin = schedule.bin_assignment[i];
        if (bin < 0 || bin >= catalog.size()) {
            report.violations.push_back({"2b", -1, 1.0});
            continue;
        }
        report.bin_cost += catalog.at(bin).cost_horizon;
    }

    // Capacity sizing (2c).
    for (int i = 0; i < n; ++i) {
        const int bin = schedule.bin_assignment[i];
        if (bin < 0 || bin >= catalog.size()) continue;
        const double excess = schedule.w_max[i] - catalog.at(bin).capacity_m3;
        if (excess > kWasteTol) report.violations.push_back({"2c", -1, excess});
    }

    // Rest days carry no routes (2e).
    for (int t = 0; t < days; ++t)
        if (horizon.is_rest(t) && !schedule.routes[t].empty())
            report.violations.push_back(
                {"2e", t, static_cast<double>(schedule.routes[t].size())});

    // Fleet size (2g) and shift length (2h) on working days.
    for (int t = 0; t < days; ++t) {
        if (horizon.is_rest(t)) continue;
        const int nr = static_cast<int>(schedule.routes[t].size());
        if (nr > fleet.n_vehicles) {
            report.excess_routes[t] = nr - fleet.n_vehicles;
            report.violations.push_back({"2g", t, static_cast<double>(nr - fleet.n_vehicles)});
        }
    }
    for (int t = 0; t < days; ++t) {
        for (size_t r = 0; r < schedule.routes[t].size(); ++r) {
            const double tt =
                route_time(schedule.routes[t][r], schedule.bin_assignment, instance, catalog,
                           fleet);
            report.routing_cost += fleet.cost_per_minute * tt;
            if (!horizon.is_rest(t) && tt > fleet.shift_minutes + kCostTol) {
                const double over = tt - fleet.shift_minutes;
                report.time_overruns.push_back({t, static_cast<int>(r), over});
                report.violations.push_back({"2h", t, over});
            }
        }
    }

    // Vehicle capacity along every route (2i) and the load-tracking bound of
    // (2j), which also caps the stored accumulation at Q for every point.
    for (int t = 0; t < days; ++t) {
        for (const Route& route : schedule.routes[t]) {
            const LoadProfile prof = route_loads(route, schedule.accumulation, t, fleet);
            if (prof.overflow)
                report.violations.push_back(
                    {"2i", t, prof.cumulative.back() - fleet.vehicle_capacity});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < days; ++t)
            if (schedule.accumulation(i, t) > fleet.vehicle_capacity + kWasteTol)
                report.violations.push_back(
                    {"2j", t, schedule.accumulation(i, t) - fleet.vehicle_capacity});

    // Accumulation recurrences: interior days (2k), the cyclic wrap (2l), and
    // the peak bound (2m), checked literally on the stored levels.
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < days; ++t) {
            const int prev = (t - 1 + days) % days;
            const double expected =
                instance.daily_waste[i] +
                schedule.accumulation(i, prev) * (visited(i, prev) ? 0.0 : 1.0);
            const double residual = std::abs(schedule.accumulation(i, t) - expected);
            if (residual > kWasteTol)
                report.violations.push_back({t == 0 ? "2l" : "2k", t, residual});
        }
        for (int t = 0; t < days; ++t) {
            const double over = schedule.accumulation(i, t) - schedule.w_max[i];
            if (over > kWasteTol) report.violations.push_back({"2m", t, over});
        }
    }

    report.overall_cost = report.bin_cost + report.routing_cost;
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace binroute

#endif
