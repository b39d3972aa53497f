#ifndef BINROUTE_LP_HPP
#define BINROUTE_LP_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binroute/common.hpp"
#include "binroute/instance.hpp"
#include "binroute/schedule.hpp"

namespace binroute {

enum class VarKind { Binary, Continuous };
enum class Sense { LE, GE, EQ };

struct LpVar {
    std::string name;
    VarKind kind;
};

struct LpConstraint {
    std::string name;
    std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
    Sense sense;
    double rhs;
};

// In-memory linear model. Arc variables x/y run over the full (n+1)^2 index
// square including the depot; the linearization variable z runs over
// collection points only, so the emitted service-time expression charges
// arrivals from other collection points (arrivals from the depot carry no z
// variable). Vehicle and day indices are 1-based in variable names.
struct LpModel {
    std::string name;
    std::vector<LpVar> vars;
    std::vector<LpConstraint> constraints;
    std::vector<std::pair<int, double>> objective;
    double big_m = 0.0;

    // Index layout.
    int n_points = 0, n_days = 0, n_vehicles = 0, n_bins = 0;
    int x0 = 0, y0 = 0, w0 = 0, wmax0 = 0, nbi0 = 0, z0 = 0;

    int x_index(int i, int j, int v, int t) const {  // i,j in 0..n; v,t 1-based
        const int np = n_points + 1;
        return x0 + ((i * np + j) * n_vehicles + (v - 1)) * n_days + (t - 1);
    }
    int y_index(int i, int j, int v, int t) const {
        const int np = n_points + 1;
        return y0 + ((i * np + j) * n_vehicles + (v - 1)) * n_days + (t - 1);
    }
    int w_index(int i, int t) const {  // i in 1..n
        return w0 + (i - 1) * n_days + (t - 1);
    }
    int wmax_index(int i) const { return wmax0 + (i - 1); }
    int n_index(int b, int i) const {  // i in 0..n
        return nbi0 + b * (n_points + 1) + i;
    }
    int z_index(int i, int b, int j, int v, int t) const {  // i,j in 1..n
        return z0 + ((((i - 1) * n_bins + b) * n_points + (j - 1)) * n_vehicles + (v - 1)) *
                        n_days +
               (t - 1);
    }
};

namespace lp_detail {

inline std::string idx_name(const std::string& head, std::initializer_list<int> parts) {
    std::string out = head;
    for (int p : parts) {
        out += '_';
        out += std::to_string(p);
    }
    return out;
}

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace lp_detail

inline LpModel build_milp(const Instance& instance, const Horizon& horizon,
                          const BinCatalog& catalog, const FleetParams& fleet) {
    using lp_detail::idx_name;
    const int n = instance.n_points;
    const int days = horizon.n_days;
    const int nv = fleet.n_vehicles;
    const int nb = catalog.size();

    LpModel m;
    m.name = instance.name;
    m.n_points = n;
    m.n_days = days;
    m.n_vehicles = nv;
    m.n_bins = nb;
    m.big_m = catalog.max_capacity();

    // Variables, in fixed declaration order.
    m.x0 = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int v = 1; v <= nv; ++v)
                for (int t = 1; t <= days; ++t)
                    m.vars.push_back({idx_name("x", {i, j, v, t}), VarKind::Binary});
    m.y0 = static_cast<int>(m.vars.size());
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int v = 1; v <= nv; ++v)
                for (int t = 1; t <= days; ++t)
                    m.vars.push_back({idx_name("y", {i, j, v, t}), VarKind::Continuous});
    m.w0 = static_cast<int>(m.vars.size());
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= days; ++t)
            m.vars.push_back({idx_name("w", {i, t}), VarKind::Continuous});
    m.wmax0 = static_cast<int>(m.vars.size());
    for (int i = 1; i <= n; ++i) m.vars.push_back({idx_name("wmax", {i}), VarKind::Continuous});
    m.nbi0 = static_cast<int>(m.vars.size());
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i <= n; ++i)
            m.vars.push_back({idx_name("n", {b, i}), VarKind::Binary});
    m.z0 = static_cast<int>(m.vars.size());
    for (int i = 1; i <= n; ++i)
        for (int b = 0; b < nb; ++b)
            for (int j = 1; j <= n; ++j)
                for (int v = 1; v <= nv; ++v)
                    for (int t = 1; t <= days; ++t)
                        m.vars.push_back({idx_name("z", {i, b, j, v, t}), VarKind::Continuous});

    // Objective: bin installation plus the linearized vehicle service time.
    for (int b = 0; b < nb; ++b)
        for (int i = 1; i <= n; ++i)
            m.objective.emplace_back(m.n_index(b, i), catalog.at(b).cost_horizon);
    const double ccv = fleet.cost_per_minute;
    for (int v = 1; v <= nv; ++v)
        for (int t = 1; t <= days; ++t) {
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    double coeff = instance.travel(i, j);
                    if (j == 0) coeff += fleet.unload_minutes;
                    if (coeff != 0.0) m.objective.emplace_back(m.x_index(i, j, v, t), ccv * coeff);
                }
            for (int i = 1; i <= n; ++i)
                for (int b = 0; b < nb; ++b)
                    for (int j = 1; j <= n; ++j)
                        m.objective.emplace_back(m.z_index(i, b, j, v, t),
                                                 ccv * catalog.at(b).service_minutes);
        }

    auto add = [&](std::string name, std::vector<std::pair<int, double>> terms, Sense sense,
                   double rhs) {
        m.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
    };

    // (2a) no combination at the depot; (2b) exactly one per point.
    for (int b = 0; b < nb; ++b)
        add(idx_name("c2a", {b}), {{m.n_index(b, 0), 1.0}}, Sense::EQ, 0.0);
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int b = 0; b < nb; ++b) terms.emplace_back(m.n_index(b, i), 1.0);
        add(idx_name("c2b", {i}), std::move(terms), Sense::EQ, 1.0);
    }
    // (2c) installed capacity covers the peak accumulation.
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int b = 0; b < nb; ++b) terms.emplace_back(m.n_index(b, i), catalog.at(b).capacity_m3);
        terms.emplace_back(m.wmax_index(i), -1.0);
        add(idx_name("c2c", {i}), std::move(terms), Sense::GE, 0.0);
    }
    // (2d) no self loops.
    for (int i = 0; i <= n; ++i)
        for (int v = 1; v <= nv; ++v)
            for (int t = 1; t <= days; ++t)
                add(idx_name("c2d", {i, v, t}), {{m.x_index(i, i, v, t), 1.0}}, Sense::EQ, 0.0);
    // (2e) no movement on rest days.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int v = 1; v <= nv; ++v)
                for (int t = 1; t <= days; ++t)
                    if (horizon.is_rest(t - 1))
                        add(idx_name("c2e", {i, j, v, t}), {{m.x_index(i, j, v, t), 1.0}},
                            Sense::EQ, 0.0);
    // (2f) flow conservation.
    for (int j = 0; j <= n; ++j)
        for (int v = 1; v <= nv; ++v)
            for (int t = 1; t <= days; ++t) {
                std::vector<std::pair<int, double>> terms;
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(m.x_index(i, j, v, t), 1.0);
                }
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(m.x_index(j, i, v, t), -1.0);
                }
                add(idx_name("c2f", {j, v, t}), std::move(terms), Sense::EQ, 0.0);
            }
    // (2g) at most one departure from the depot per vehicle and working day.
    for (int v = 1; v <= nv; ++v)
        for (int t = 1; t <= days; ++t) {
            if (horizon.is_rest(t - 1)) continue;
            std::vector<std::pair<int, double>> terms;
            for (int j = 1; j <= n; ++j) terms.emplace_back(m.x_index(0, j, v, t), 1.0);
            add(idx_name("c2g", {v, t}), std::move(terms), Sense::LE, 1.0);
        }
    // (2h) shift length, with the linearized service time.
    for (int v = 1; v <= nv; ++v)
        for (int t = 1; t <= days; ++t) {
            if (horizon.is_rest(t - 1)) continue;
            std::vector<std::pair<int, double>> terms;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    double coeff = instance.travel(i, j);
                    if (j == 0) coeff += fleet.unload_minutes;
                    if (coeff != 0.0) terms.emplace_back(m.x_index(i, j, v, t), coeff);
                }
            for (int i = 1; i <= n; ++i)
                for (int b = 0; b < nb; ++b)
                    for (int j = 1; j <= n; ++j)
                        terms.emplace_back(m.z_index(i, b, j, v, t),
                                           catalog.at(b).service_minutes);
            add(idx_name("c2h", {v, t}), std::move(terms), Sense::LE, fleet.shift_minutes);
        }
    // (2i) arc loads only on used arcs, capped by the vehicle capacity.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int v = 1; v <= nv; ++v)
                for (int t = 1; t <= days; ++t)
                    add(idx_name("c2i", {i, j, v, t}),
                        {{m.y_index(i, j, v, t), 1.0},
                         {m.x_index(i, j, v, t), -fleet.vehicle_capacity}},
                        Sense::LE, 0.0);
    // (2j) load bookkeeping / subroute elimination.
    for (int j = 1; j <= n; ++j)
        for (int v = 1; v <= nv; ++v)
            for (int t = 1; t <= days; ++t) {
                std::vector<std::pair<int, double>> terms;
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(m.y_index(i, j, v, t), 1.0);
                }
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(m.y_index(j, i, v, t), -1.0);
                }
                terms.emplace_back(m.w_index(j, t), 1.0);
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(m.x_index(i, j, v, t), fleet.vehicle_capacity);
                }
                add(idx_name("c2j", {j, v, t}), std::move(terms), Sense::LE,
                    fleet.vehicle_capacity);
            }
    // Big-M accumulation recurrences replacing the bilinear forms.
    for (int i = 1; i <= n; ++i)
        for (int t = 2; t <= days; ++t) {
            std::vector<std::pair<int, double>> terms;
            terms.emplace_back(m.w_index(i, t), 1.0);
            terms.emplace_back(m.w_index(i, t - 1), -1.0);
            for (int j = 0; j <= n; ++j)
                for (int v = 1; v <= nv; ++v)
                    terms.emplace_back(m.x_index(i, j, v, t - 1), m.big_m);
            add(idx_name("l1", {i, t}), std::move(terms), Sense::GE, instance.daily_waste[i - 1]);
        }
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        terms.emplace_back(m.w_index(i, 1), 1.0);
        terms.emplace_back(m.w_index(i, days), -1.0);
        for (int j = 0; j <= n; ++j)
            for (int v = 1; v <= nv; ++v)
                terms.emplace_back(m.x_index(i, j, v, days), m.big_m);
        add(idx_name("l2", {i}), std::move(terms), Sense::GE, instance.daily_waste[i - 1]);
    }
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= days; ++t)
            add(idx_name("l3", {i, t}), {{m.w_index(i, t), 1.0}}, Sense::GE,
                instance.daily_waste[i - 1]);
    // (2m) peak tracking.
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= days; ++t)
            add(idx_name("c2m", {i, t}),
                {{m.w_index(i, t), 1.0}, {m.wmax_index(i), -1.0}}, Sense::LE, 0.0);
    // Product linearization rows tying z to x and n.
    for (int i = 1; i <= n; ++i)
        for (int b = 0; b < nb; ++b)
            for (int j = 1; j <= n; ++j)
                for (int v = 1; v <= nv; ++v)
                    for (int t = 1; t <= days; ++t) {
                        const int zi = m.z_index(i, b, j, v, t);
                        add(idx_name("lin1", {i, b, j, v, t}),
                            {{zi, 1.0}, {m.n_index(b, j), -1.0}}, Sense::LE, 0.0);
                        add(idx_name("lin2", {i, b, j, v, t}),
                            {{zi, 1.0}, {m.x_index(i, j, v, t), -1.0}}, Sense::LE, 0.0);
                        add(idx_name("lin3", {i, b, j, v, t}),
                            {{zi, 1.0}, {m.n_index(b, j), -1.0}, {m.x_index(i, j, v, t), -1.0}},
                            Sense::GE, -1.0);
                    }
    return m;
}

// CPLEX-style LP text. Byte-deterministic for identical inputs.
inline std::string write_lp(const LpModel& model) {
    using lp_detail::num;
    std::string out;
    out.reserve(model.constraints.size() * 64);
    out += "\\ LP export: " + model.name + "\n";
    out += "Minimize\n obj:";
    {
        int on_line = 0;
        bool first = true;
        for (const auto& [idx, coeff] : model.objective) {
            if (coeff == 0.0) continue;
            out += first ? (coeff < 0 ? " - " : " ") : (coeff < 0 ? " - " : " + ");
            out += num(std::abs(coeff));
            out += ' ';
            out += model.vars[idx].name;
            first = false;
            if (++on_line == 8) {
                out += '\n';
                out += "     ";
                on_line = 0;
            }
        }
    }
    out += "\nSubject To\n";
    for (const auto& c : model.constraints) {
        out += ' ';
        out += c.name;
        out += ':';
        int on_line = 0;
        bool first = true;
        for (const auto& [idx, coeff] : c.terms) {
            if (coeff == 0.0) continue;
            out += first ? (coeff < 0 ? " - " : " ") : (coeff < 0 ? " - " : " + ");
            out += num(std::abs(coeff));
            out += ' ';
            out += model.vars[idx].name;
            first = false;
            if (++on_line == 8) {
                out += "\n     ";
                on_line = 0;
            }
        }
        switch (c.sense) {
            case Sense::LE: out += " <= "; break;
            case Sense::GE: out += " >= "; break;
            case Sense::EQ: out += " = "; break;
        }
        out += num(c.rhs);
        out += '\n';
    }
    out += "Bounds\n";
    for (const auto& v : model.vars)
        if (v.kind == VarKind::Continuous) {
            out += " 0 <= ";
            out += v.name;
            out += '\n';
        }
    out += "Binaries\n";
    {
        int on_line = 0;
        for (const auto& v : model.vars)
            if (v.kind == VarKind::Binary) {
                out += ' ';
                out += v.name;
                if (++on_line == 10) {
                    out += '\n';
                    on_line = 0;
                }
            }
        if (on_line != 0) out += '\n';
    }
    out += "End\n";
    return out;
}

inline std::string emit_milp(const Instance& instance, const Horizon& horizon,
                             const BinCatalog& catalog, const FleetParams& fleet) {
    return write_lp(build_milp(instance, horizon, catalog, fleet));
}

using Assignment = std::unordered_map<std::string, double>;

struct LpViolation {
    std::string constraint;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // negative means violated
};

// Evaluates every constraint at the assignment. The assignment must cover
// every model variable.
inline std::vector<LpViolation> substitute_solution(const LpModel& model,
                                                    const Assignment& assignment) {
    std::vector<double> values(model.vars.size());
    for (size_t i = 0; i < model.vars.size(); ++i) {
        auto it = assignment.find(model.vars[i].name);
        if (it == assignment.end())
            throw Error("substitute_solution: missing variable " + model.vars[i].name);
        values[i] = it->second;
    }
    std::vector<LpViolation> violations;
    for (const auto& c : model.constraints) {
        double lhs = 0.0;
        for (const auto& [idx, coeff] : c.terms) lhs += coeff * values[idx];
        double slack = 0.0;
        switch (c.sense) {
            case Sense::LE: slack = c.rhs - lhs; break;
            case Sense::GE: slack = lhs - c.rhs; break;
            case Sense::EQ: slack = -std::abs(lhs - c.rhs); break;
        }
        if (slack < -kCostTol) violations.push_back({c.name, lhs, c.rhs, slack});
    }
    return violations;
}

// Maps a decoded schedule onto the full MILP variable space: route r of a day
// is vehicle r+1, arc loads follow the cumulative pickup bookkeeping, and
// z = x * n on collection-point arcs. All remaining variables are zero.
inline Assignment schedule_to_assignment(const Schedule& schedule, const LpModel& model,
                                         const Instance& instance, const Horizon& horizon) {
    Assignment a;
    a.reserve(model.vars.size());
    for (const auto& v : model.vars) a.emplace(v.name, 0.0);

    const int n = instance.n_points;
    for (int t0 = 0; t0 < horizon.n_days; ++t0) {
        const int t = t0 + 1;
        if (static_cast<int>(schedule.routes[t0].size()) > model.n_vehicles)
            throw Error("schedule_to_assignment: more routes than vehicles on one day");
        for (size_t r = 0; r < schedule.routes[t0].size(); ++r) {
            const Route& route = schedule.routes[t0][r];
            const int v = static_cast<int>(r) + 1;
            double load = 0.0;
            int prev = 0;
            for (int point : route) {
                a[model.vars[model.x_index(prev, point, v, t)].name] = 1.0;
                a[model.vars[model.y_index(prev, point, v, t)].name] = load;
                load += schedule.accumulation(point - 1, t0);
                prev = point;
            }
            a[model.vars[model.x_index(prev, 0, v, t)].name] = 1.0;
            a[model.vars[model.y_index(prev, 0, v, t)].name] = load;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int t = 1; t <= horizon.n_days; ++t)
            a[model.vars[model.w_index(i, t)].name] = schedule.accumulation(i - 1, t - 1);
        a[model.vars[model.wmax_index(i)].name] = schedule.w_max[i - 1];
        a[model.vars[model.n_index(schedule.bin_assignment[i - 1], i)].name] = 1.0;
    }
    // z follows the products that are actually one.
    for (int t0 = 0; t0 < horizon.n_days; ++t0)
        for (size_t r = 0; r < schedule.routes[t0].size(); ++r) {
            const Route& route = schedule.routes[t0][r];
            const int v = static_cast<int>(r) + 1;
            for (size_t k = 1; k < route.size(); ++k) {
                const int i = route[k - 1];
                const int j = route[k];
                const int b = schedule.bin_assignment[j - 1];
                a[model.vars[model.z_index(i, b, j, v, t0 + 1)].name] = 1.0;
            }
        }
    return a;
}

// |overall - bound| / |overall|, as a fraction.
inline double optimality_gap(double overall_cost, double lower_bound) {
    if (overall_cost == 0.0) throw Error("optimality_gap: zero overall cost");
    return std::abs(overall_cost - lower_bound) / std::abs(overall_cost);
}

}  // namespace binroute

#endif
