#ifndef BINROUTE_SVG_HPP
#define BINROUTE_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "binroute/common.hpp"
#include "binroute/instance.hpp"
#include "binroute/schedule.hpp"

namespace binroute {

namespace svg_detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline const char* kStrokes[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

}  // namespace svg_detail

// One schematic plot per working day: depot square, point circles, one
// polyline per route, legend with route times. Coordinates are projected
// equirectangularly onto a fixed viewBox, so output is deterministic.
inline std::vector<std::string> render_routes(const Schedule& schedule, const Instance& instance,
                                              const Horizon& horizon) {
    if (instance.coords.size() != static_cast<size_t>(instance.n_points))
        throw Error("render_routes: instance has no coordinates");

    double lat_min = 1e9, lat_max = -1e9, lon_min = 1e9, lon_max = -1e9;
    auto widen = [&](double lat, double lon) {
        lat_min = std::min(lat_min, lat);
        lat_max = std::max(lat_max, lat);
        lon_min = std::min(lon_min, lon);
        lon_max = std::max(lon_max, lon);
    };
    for (const auto& [lat, lon] : instance.coords) widen(lat, lon);
    double depot_lat, depot_lon;
    if (instance.depot_coord) {
        depot_lat = instance.depot_coord->first;
        depot_lon = instance.depot_coord->second;
    } else {
        depot_lat = depot_lon = 0.0;  // centroid, plotting only
        for (const auto& [lat, lon] : instance.coords) {
            depot_lat += lat / instance.n_points;
            depot_lon += lon / instance.n_points;
        }
    }
    widen(depot_lat, depot_lon);

    const double width = 640.0, height = 480.0, margin = 40.0;
    const double lon_span = std::max(lon_max - lon_min, 1e-9);
    const double lat_span = std::max(lat_max - lat_min, 1e-9);
    auto px = [&](double lon) { return margin + (lon - lon_min) / lon_span * (width - 2 * margin); };
    auto py = [&](double lat) {
        return height - margin - (lat - lat_min) / lat_span * (height - 2 * margin);
    };
    auto point_xy = [&](int point) {
        const auto& [lat, lon] = instance.coords[point - 1];
        return std::pair<double, double>{px(lon), py(lat)};
    };

    using svg_detail::fmt;
    std::vector<std::string> out;
    for (int t = 0; t < horizon.n_days; ++t) {
        if (horizon.is_rest(t)) continue;
        std::string svg;
        svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
               "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
               fmt(height) + "\">\n";
        svg += "<title>day " + std::to_string(t + 1) + "</title>\n";

        for (size_t r = 0; r < schedule.routes[t].size(); ++r) {
            const char* stroke = svg_detail::kStrokes[r % 8];
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
                   "\" stroke-width=\"2\" points=\"";
            svg += fmt(px(depot_lon)) + "," + fmt(py(depot_lat));
            for (int point : schedule.routes[t][r]) {
                const auto [x, y] = point_xy(point);
                svg += " " + fmt(x) + "," + fmt(y);
            }
            svg += " " + fmt(px(depot_lon)) + "," + fmt(py(depot_lat));
            svg += "\"/>\n";
        }
        for (int point = 1; point <= instance.n_points; ++point) {
            const auto [x, y] = point_xy(point);
            svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
                   "\" r=\"4\" fill=\"#333333\"/>\n";
            svg += "<text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(y - 6) +
                   "\" font-size=\"10\">" + std::to_string(point) + "</text>\n";
        }
        svg += "<rect x=\"" + fmt(px(depot_lon) - 5) + "\" y=\"" + fmt(py(depot_lat) - 5) +
               "\" width=\"10\" height=\"10\" fill=\"#0044cc\"/>\n";

        double legend_y = 16.0;
        for (size_t r = 0; r < schedule.routes[t].size(); ++r) {
            svg += "<text x=\"8\" y=\"" + fmt(legend_y) + "\" font-size=\"12\" fill=\"" +
                   svg_detail::kStrokes[r % 8] + "\">R" + std::to_string(r + 1) + ": " +
                   fmt(schedule.route_times[t][r]) + " min</text>\n";
            legend_y += 14.0;
        }
        svg += "</svg>\n";
        out.push_back(std::move(svg));
    }
    return out;
}

}  // namespace binroute

#endif
