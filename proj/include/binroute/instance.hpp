#ifndef BINROUTE_INSTANCE_HPP
#define BINROUTE_INSTANCE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binroute/common.hpp"

namespace binroute {

// A collection-point instance. Point ids run 1..n_points; index 0 is the
// depot in the travel matrix. Coordinates are informational (plotting only),
// travel times are the routing authority.
struct Instance {
    std::string name;
    int n_points = 0;
    Matrix travel;                                   // (n_points+1) x (n_points+1), minutes
    std::vector<double> daily_waste;                 // index point-1, m3/day
    std::vector<std::pair<double, double>> coords;   // (lat, lon) per point
    std::optional<std::pair<double, double>> depot_coord;

    double travel_time(int from, int to) const { return travel(from, to); }
    double waste(int point) const { return daily_waste[point - 1]; }

    void validate() const {
        if (n_points < 1) throw Error("instance has no collection points");
        if (travel.rows() != n_points + 1 || travel.cols() != n_points + 1)
            throw Error("travel matrix dimension does not match point count");
        for (int i = 0; i <= n_points; ++i) {
            if (std::abs(travel(i, i)) > 1e-9)
                throw Error("travel matrix has a nonzero diagonal entry");
            for (int j = 0; j <= n_points; ++j)
                if (travel(i, j) < 0.0) throw Error("negative travel time");
        }
        if (static_cast<int>(daily_waste.size()) != n_points)
            throw Error("daily waste vector does not match point count");
        for (double w : daily_waste)
            if (w <= 0.0) throw Error("daily waste must be positive");
    }
};

// Planning horizon: days are 0-based internally, day 0 = Monday. Rest days
// carry no collection but waste keeps accruing on them.
struct Horizon {
    int n_days = 0;
    std::vector<bool> rest;  // size n_days

    bool is_rest(int day) const { return rest[day]; }

    int working_days() const {
        return n_days - static_cast<int>(std::count(rest.begin(), rest.end(), true));
    }

    std::vector<int> working_day_list() const {
        std::vector<int> out;
        for (int t = 0; t < n_days; ++t)
            if (!rest[t]) out.push_back(t);
        return out;
    }

    // Longest cyclic run of consecutive rest days.
    int max_rest_run() const {
        if (working_days() == n_days) return 0;
        int best = 0, run = 0;
        for (int t = 0; t < 2 * n_days; ++t) {
            if (rest[t % n_days]) {
                ++run;
                best = std::max(best, std::min(run, n_days));
            } else {
                run = 0;
            }
        }
        return best;
    }

    void validate() const {
        if (n_days < 1) throw Error("horizon needs at least one day");
        if (static_cast<int>(rest.size()) != n_days) throw Error("rest flags size mismatch");
        if (working_days() < 1) throw Error("horizon needs at least one working day");
    }

    // One week, Monday through Sunday, with Sunday as the rest day.
    static Horizon standard_week() {
        Horizon h;
        h.n_days = 7;
        h.rest.assign(7, false);
        h.rest[6] = true;
        return h;
    }

    // rest_days are 1-based day numbers (1 = Monday).
    static Horizon make(int n_days, const std::vector<int>& rest_days) {
        Horizon h;
        h.n_days = n_days;
        h.rest.assign(n_days, false);
        for (int d : rest_days) {
            if (d < 1 || d > n_days) throw Error("rest day out of range");
            h.rest[d - 1] = true;
        }
        h.validate();
        return h;
    }
};

// One installable bin combination.
struct BinCombo {
    double capacity_m3 = 0.0;     // CAP
    double service_minutes = 0.0; // per-visit emptying time
    double cost_horizon = 0.0;    // amortized cost over the planning horizon, US$
};

struct BinCatalog {
    std::vector<BinCombo> combos;

    int size() const { return static_cast<int>(combos.size()); }
    const BinCombo& at(int idx) const { return combos[idx]; }

    double max_capacity() const {
        double m = 0.0;
        for (const auto& c : combos) m = std::max(m, c.capacity_m3);
        return m;
    }

    void validate() const {
        if (combos.empty()) throw Error("bin catalog is empty");
        for (const auto& c : combos)
            if (c.capacity_m3 <= 0.0 || c.service_minutes <= 0.0 || c.cost_horizon <= 0.0)
                throw Error("bin combination fields must be positive");
    }
};

// The eight commercial bin combinations used by the bundled instances.
inline BinCatalog default_catalog() {
    return BinCatalog{{
        {1.1, 0.70, 0.78},
        {2.2, 1.40, 1.56},
        {2.4, 0.66, 1.56},
        {3.3, 2.10, 1.56},
        {3.5, 1.36, 1.56},
        {4.3, 1.37, 1.56},
        {4.8, 1.32, 1.56},
        {5.6, 1.33, 1.56},
    }};
}

struct FleetParams {
    double vehicle_capacity = 0.0; // Q, m3
    int n_vehicles = 0;
    double unload_minutes = 0.0;   // charged once per route, on depot return
    double shift_minutes = 0.0;    // driver working day
    double cost_per_minute = 0.0;  // US$/min

    void validate() const {
        if (vehicle_capacity <= 0.0 || n_vehicles <= 0 || unload_minutes <= 0.0 ||
            shift_minutes <= 0.0 || cost_per_minute <= 0.0)
            throw Error("fleet parameters must be positive");
    }
};

inline constexpr double kDefaultUnloadMinutes = 8.0;
inline constexpr double kDefaultCostPerMinute = 0.5764;

// Default vehicle capacity rule used by the bundled instance family: 12 m3
// up to 12 collection points, 21 m3 beyond.
inline double default_vehicle_capacity(int n_points) { return n_points <= 12 ? 12.0 : 21.0; }

struct FleetDerivation {
    int n_vehicles = 0;
    double shift_minutes = 0.0;
};

// Fleet size is ceil(n_points / 10). The shift length spreads the whole
// travel-time mass over ordered vehicle pairs and working days; it divides by
// n_V * (n_V - 1), so it is undefined for a single-vehicle fleet.
inline FleetDerivation derive_fleet(const Instance& instance, const Horizon& horizon) {
    const int n_vehicles = (instance.n_points + 9) / 10;
    if (n_vehicles < 2)
        throw Error("shift formula undefined for fewer than two vehicles; supply shift_minutes");
    double sum = 0.0;
    for (int i = 0; i <= instance.n_points; ++i)
        for (int j = 0; j <= instance.n_points; ++j) sum += instance.travel(i, j);
    const double denom =
        static_cast<double>(n_vehicles) * (n_vehicles - 1) * horizon.working_days();
    return {n_vehicles, std::ceil(sum / denom)};
}

}  // namespace binroute

#endif
