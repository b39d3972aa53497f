#ifndef BINROUTE_IO_HPP
#define BINROUTE_IO_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "binroute/chromosome.hpp"
#include "binroute/common.hpp"
#include "binroute/ga.hpp"
#include "binroute/instance.hpp"

namespace binroute {

namespace io_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline double parse_number(const std::string& token, const std::string& where) {
    try {
        size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw Error("non-numeric token '" + token + "' in " + where);
    }
}

}  // namespace io_detail

// time.txt: whitespace-separated square matrix of minutes, row/column 0 is
// the depot. waste.txt: one record per collection point with latitude,
// longitude and daily waste (m3); the column order can be overridden with a
// "# columns: ..." directive and an optional leading "depot <lat> <lon>"
// record places the depot for plotting.
inline Instance parse_instance(const std::string& time_path, const std::string& waste_path,
                               const std::string& name = "") {
    Instance inst;
    inst.name = name;

    // Travel matrix.
    {
        std::istringstream in(io_detail::read_file(time_path));
        std::vector<double> values;
        std::string token;
        while (in >> token) values.push_back(io_detail::parse_number(token, time_path));
        const int dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(values.size()))));
        if (dim < 2 || static_cast<size_t>(dim) * dim != values.size())
            throw Error(time_path + ": token count is not a square matrix");
        inst.travel = Matrix(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const double v = values[static_cast<size_t>(i) * dim + j];
                if (v < 0.0) throw Error(time_path + ": negative travel time");
                inst.travel(i, j) = v;
            }
        inst.n_points = dim - 1;
    }

    // Waste records.
    {
        std::istringstream in(io_detail::read_file(waste_path));
        std::string line;
        int lat_col = 0, lon_col = 1, waste_col = 2;
        while (std::getline(in, line)) {
            const size_t hash = line.find('#');
            std::string comment;
            if (hash != std::string::npos) {
                comment = line.substr(hash + 1);
                line = line.substr(0, hash);
            }
            if (comment.find("columns:") != std::string::npos) {
                std::istringstream cs(comment.substr(comment.find("columns:") + 8));
                std::string col;
                int idx = 0;
                lat_col = lon_col = waste_col = -1;
                while (cs >> col) {
                    if (col == "lat") lat_col = idx;
                    else if (col == "lon") lon_col = idx;
                    else if (col == "waste") waste_col = idx;
                    ++idx;
                }
                if (lat_col < 0 || lon_col < 0 || waste_col < 0)
                    throw Error(waste_path + ": bad columns directive");
            }
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            if (tokens[0] == "depot") {
                if (tokens.size() != 3) throw Error(waste_path + ": bad depot record");
                inst.depot_coord = {io_detail::parse_number(tokens[1], waste_path),
                                    io_detail::parse_number(tokens[2], waste_path)};
                continue;
            }
            if (tokens.size() != 3) throw Error(waste_path + ": expected 3 columns per record");
            double cols[3];
            for (int k = 0; k < 3; ++k) cols[k] = io_detail::parse_number(tokens[k], waste_path);
            const double lat = cols[lat_col], lon = cols[lon_col], waste = cols[waste_col];
            if (lat < -90.0 || lat > 90.0) throw Error(waste_path + ": latitude out of range");
            if (lon < -180.0 || lon > 180.0) throw Error(waste_path + ": longitude out of range");
            if (waste <= 0.0) throw Error(waste_path + ": daily waste must be positive");
            inst.coords.emplace_back(lat, lon);
            inst.daily_waste.push_back(waste);
        }
    }

    if (static_cast<int>(inst.daily_waste.size()) != inst.n_points)
        throw Error("dimension mismatch: " + time_path + " holds " +
                    std::to_string(inst.n_points + 1) + "x" + std::to_string(inst.n_points + 1) +
                    " entries but " + waste_path + " lists " +
                    std::to_string(inst.daily_waste.size()) + " points");
    inst.validate();
    return inst;
}

// ---------------------------------------------------------------------------
// Run configuration files: `key = value` lines, '#' comments.

struct RunSetup {
    GaConfig ga;
    int days = 7;
    std::vector<int> rest_days = {7};  // 1-based, 7 = Sunday
    std::optional<double> vehicle_capacity;
    std::optional<int> n_vehicles;
    std::optional<double> shift_minutes;
    double unload_minutes = kDefaultUnloadMinutes;
    double cost_per_minute = kDefaultCostPerMinute;
};

inline RunSetup parse_run_config(std::istream& in, const std::string& where) {
    RunSetup setup;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key, eq, value;
        if (!(ls >> key)) continue;
        if (!(ls >> eq >> value) || eq != "=")
            throw Error(where + ":" + std::to_string(line_no) + ": expected 'key = value'");
        auto num = [&] { return io_detail::parse_number(value, where); };
        if (key == "population") setup.ga.population_size = static_cast<int>(num());
        else if (key == "generations") setup.ga.generations = static_cast<int>(num());
        else if (key == "crossover") setup.ga.crossover_op = crossover_from_string(value);
        else if (key == "crossover_rate") setup.ga.crossover_rate = num();
        else if (key == "mutation") setup.ga.mutation_op = mutation_from_string(value);
        else if (key == "mutation_rate") setup.ga.mutation_rate = num();
        else if (key == "elite") setup.ga.elite_count = static_cast<int>(num());
        else if (key == "lambda") setup.ga.lambda = num();
        else if (key == "gamma") setup.ga.gamma = num();
        else if (key == "seed") setup.ga.rng_seed = static_cast<uint64_t>(num());
        else if (key == "days") setup.days = static_cast<int>(num());
        else if (key == "rest_days") {
            setup.rest_days.clear();
            std::istringstream rs(value);
            std::string part;
            while (std::getline(rs, part, ','))
                setup.rest_days.push_back(static_cast<int>(io_detail::parse_number(part, where)));
        } else if (key == "vehicle_capacity") setup.vehicle_capacity = num();
        else if (key == "n_vehicles") setup.n_vehicles = static_cast<int>(num());
        else if (key == "shift_minutes") setup.shift_minutes = num();
        else if (key == "unload_minutes") setup.unload_minutes = num();
        else if (key == "cost_per_minute") setup.cost_per_minute = num();
        else throw Error(where + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    setup.ga.validate();
    return setup;
}

inline RunSetup load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path);
    return parse_run_config(in, path);
}

// Assembles the full problem from an instance plus config overrides; fleet
// size and shift length fall back to the derivation formulas.
inline Problem make_problem(const Instance& instance, const RunSetup& setup,
                            const BinCatalog& catalog = default_catalog()) {
    Problem p;
    p.instance = instance;
    p.horizon = Horizon::make(setup.days, setup.rest_days);
    p.catalog = catalog;
    FleetParams fleet;
    fleet.vehicle_capacity =
        setup.vehicle_capacity.value_or(default_vehicle_capacity(instance.n_points));
    fleet.unload_minutes = setup.unload_minutes;
    fleet.cost_per_minute = setup.cost_per_minute;
    if (setup.n_vehicles && setup.shift_minutes) {
        fleet.n_vehicles = *setup.n_vehicles;
        fleet.shift_minutes = *setup.shift_minutes;
    } else {
        FleetDerivation derived{0, 0.0};
        if (!setup.n_vehicles || !setup.shift_minutes)
            derived = derive_fleet(instance, p.horizon);
        fleet.n_vehicles = setup.n_vehicles.value_or(derived.n_vehicles);
        fleet.shift_minutes = setup.shift_minutes.value_or(derived.shift_minutes);
    }
    fleet.validate();
    p.fleet = fleet;
    return p;
}

// ---------------------------------------------------------------------------
// Solution files (JSON). The stored summary must agree with re-decoding the
// chromosome; stale files are rejected on load.

struct SolutionFile {
    std::string instance_name;
    uint64_t seed = 0;
    GaConfig config;
    Chromosome chromosome;
    std::vector<int> bin_assignment;
    std::vector<std::vector<Route>> routes;
    double bin_cost = 0.0;
    double routing_cost = 0.0;
    double overall_cost = 0.0;
    bool feasible = false;
};

inline SolutionFile make_solution_file(const std::string& instance_name, uint64_t seed,
                                       const GaConfig& config, const Chromosome& chromosome,
                                       const Problem& problem) {
    SolutionFile f;
    f.instance_name = instance_name;
    f.seed = seed;
    f.config = config;
    f.chromosome = chromosome;
    const Schedule s =
        decode(chromosome, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    const EvalReport r =
        evaluate(s, problem.instance, problem.horizon, problem.catalog, problem.fleet);
    f.bin_assignment = s.bin_assignment;
    f.routes = s.routes;
    f.bin_cost = r.bin_cost;
    f.routing_cost = r.routing_cost;
    f.overall_cost = r.overall_cost;
    f.feasible = r.feasible;
    return f;
}

inline nlohmann::json solution_to_json(const SolutionFile& f) {
    nlohmann::json j;
    j["format"] = "binroute-solution/1";
    j["instance"] = f.instance_name;
    j["seed"] = f.seed;
    j["config"] = {
        {"population", f.config.population_size},
        {"generations", f.config.generations},
        {"crossover", to_string(f.config.crossover_op)},
        {"crossover_rate", f.config.crossover_rate},
        {"mutation", to_string(f.config.mutation_op)},
        {"mutation_rate", f.config.mutation_rate},
        {"elite", f.config.elite_count},
        {"lambda", f.config.lambda},
        {"gamma", f.config.gamma},
    };
    j["chromosome"]["day_order"] = f.chromosome.day_order;
    std::vector<std::vector<int>> mask(f.chromosome.visit.rows());
    for (int i = 0; i < f.chromosome.visit.rows(); ++i)
        for (int t = 0; t < f.chromosome.visit.cols(); ++t)
            mask[i].push_back(f.chromosome.visit(i, t) ? 1 : 0);
    j["chromosome"]["mask"] = mask;
    j["summary"] = {
        {"bin_assignment", f.bin_assignment},
        {"routes", f.routes},
        {"bin_cost", f.bin_cost},
        {"routing_cost", f.routing_cost},
        {"overall_cost", f.overall_cost},
        {"feasible", f.feasible},
    };
    return j;
}

inline void write_solution(const std::string& path, const SolutionFile& f) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << solution_to_json(f).dump(2) << '\n';
}

inline SolutionFile read_solution(const std::string& path, const Problem& problem) {
    nlohmann::json j;
    try {
        std::ifstream in(path);
        if (!in) throw Error("cannot open " + path);
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("solution file " + path + " is not valid JSON: " + e.what());
    }
    try {
        if (j.at("format") != "binroute-solution/1")
            throw Error("unsupported solution format in " + path);
        SolutionFile f;
        f.instance_name = j.at("instance");
        f.seed = j.at("seed");
        const auto& cfg = j.at("config");
        f.config.population_size = cfg.at("population");
        f.config.generations = cfg.at("generations");
        f.config.crossover_op = crossover_from_string(cfg.at("crossover"));
        f.config.crossover_rate = cfg.at("crossover_rate");
        f.config.mutation_op = mutation_from_string(cfg.at("mutation"));
        f.config.mutation_rate = cfg.at("mutation_rate");
        f.config.elite_count = cfg.at("elite");
        f.config.lambda = cfg.at("lambda");
        f.config.gamma = cfg.at("gamma");
        f.chromosome.day_order = j.at("chromosome").at("day_order").get<std::vector<std::vector<int>>>();
        const auto mask = j.at("chromosome").at("mask").get<std::vector<std::vector<int>>>();
        if (mask.empty()) throw Error("empty mask in " + path);
        f.chromosome.visit = BoolMat(static_cast<int>(mask.size()),
                                     static_cast<int>(mask.front().size()));
        for (size_t i = 0; i < mask.size(); ++i)
            for (size_t t = 0; t < mask[i].size(); ++t)
                f.chromosome.visit(static_cast<int>(i), static_cast<int>(t)) = mask[i][t] != 0;

        validate_chromosome(f.chromosome, problem.instance, problem.horizon);
        const Schedule s = decode(f.chromosome, problem.instance, problem.horizon,
                                  problem.catalog, problem.fleet);
        const EvalReport r = evaluate(s, problem.instance, problem.horizon, problem.catalog,
                                      problem.fleet);
        const auto& sum = j.at("summary");
        const bool matches =
            sum.at("bin_assignment").get<std::vector<int>>() == s.bin_assignment &&
            sum.at("routes").get<std::vector<std::vector<Route>>>() == s.routes &&
            std::abs(sum.at("bin_cost").get<double>() - r.bin_cost) <= kCostTol &&
            std::abs(sum.at("routing_cost").get<double>() - r.routing_cost) <= kCostTol &&
            std::abs(sum.at("overall_cost").get<double>() - r.overall_cost) <= kCostTol &&
            sum.at("feasible").get<bool>() == r.feasible;
        if (!matches)
            throw Error("stale solution: summary in " + path + " disagrees with re-decoding");
        f.bin_assignment = s.bin_assignment;
        f.routes = s.routes;
        f.bin_cost = r.bin_cost;
        f.routing_cost = r.routing_cost;
        f.overall_cost = r.overall_cost;
        f.feasible = r.feasible;
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error("solution file " + path + " violates the schema: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Model assignment files: a flat JSON object mapping variable name -> value,
// the exchange format for checking external solver solutions against the
// exported model.

inline void write_assignment(const std::string& path,
                             const std::unordered_map<std::string, double>& assignment) {
    nlohmann::json j = nlohmann::json::object();
    std::vector<std::string> names;
    names.reserve(assignment.size());
    for (const auto& [name, value] : assignment) names.push_back(name);
    std::sort(names.begin(), names.end());
    for (const auto& name : names) j[name] = assignment.at(name);
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(1) << '\n';
}

inline std::unordered_map<std::string, double> read_assignment(const std::string& path) {
    nlohmann::json j;
    try {
        std::ifstream in(path);
        if (!in) throw Error("cannot open " + path);
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("assignment file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw Error("assignment file " + path + " must be a JSON object");
    std::unordered_map<std::string, double> assignment;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_number())
            throw Error("assignment file " + path + ": value of " + name + " is not numeric");
        assignment[name] = value.get<double>();
    }
    return assignment;
}

inline void write_history_csv(const std::string& path,
                              const std::vector<GenerationStats>& history) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "generation,best,mean,feasible_fraction\n";
    char buf[128];
    for (const auto& row : history) {
        std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f,%.4f\n", row.generation, row.best,
                      row.mean, row.feasible_fraction);
        out << buf;
    }
}

}  // namespace binroute

#endif
