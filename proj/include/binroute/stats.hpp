#ifndef BINROUTE_STATS_HPP
#define BINROUTE_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "binroute/common.hpp"

namespace binroute {

struct SampleStats {
    double min = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
};

inline double median_of_sorted(const std::vector<double>& sorted) {
    const size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

inline SampleStats summarize(std::vector<double> values) {
    if (values.empty()) throw Error("summarize: empty sample");
    std::sort(values.begin(), values.end());
    SampleStats s;
    s.min = values.front();
    s.median = median_of_sorted(values);
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / values.size();
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / (values.size() - 1));
    }
    return s;
}

// (C_ga - C_ref) / C_ref, as a fraction.
inline double percentage_difference(double cost_ga, double cost_ref) {
    if (cost_ref == 0.0) throw Error("percentage_difference: zero reference cost");
    return (cost_ga - cost_ref) / cost_ref;
}

// Fraction -> "x.xx" percent string, banker's rounding at two decimals.
inline std::string format_percent(double fraction) {
    const double pct = round_half_even(fraction * 100.0, 2);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", pct);
    return buf;
}

namespace stats_detail {

// Regularized upper incomplete gamma Q(a, x) via series / continued fraction.
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw Error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // Series for P(a,x), return 1 - P.
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Lentz continued fraction for Q(a,x).
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace stats_detail

// Survival function of the chi-square distribution.
inline double chi2_sf(double x, int df) {
    if (x <= 0.0) return 1.0;
    return stats_detail::gamma_q(df / 2.0, x / 2.0);
}

struct KruskalWallisResult {
    double h = 0.0;
    double p_value = 1.0;
    int df = 0;
};

// Kruskal-Wallis rank sum statistic with tie correction, p-value from the
// chi-square approximation with k-1 degrees of freedom.
inline KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    const int k = static_cast<int>(groups.size());
    if (k < 2) throw Error("kruskal_wallis: need at least two groups");
    std::vector<std::pair<double, int>> all;  // (value, group)
    for (int g = 0; g < k; ++g) {
        if (groups[g].empty()) throw Error("kruskal_wallis: empty group");
        for (double v : groups[g]) all.emplace_back(v, g);
    }
    const size_t n = all.size();
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> rank_sum(k, 0.0);
    double tie_term = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && all[j + 1].first == all[i].first) ++j;
        const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        for (size_t q = i; q <= j; ++q) rank_sum[all[q].second] += avg_rank;
        i = j + 1;
    }

    const double dn = static_cast<double>(n);
    double h = 0.0;
    for (int g = 0; g < k; ++g) {
        const double ng = static_cast<double>(groups[g].size());
        h += rank_sum[g] * rank_sum[g] / ng;
    }
    h = 12.0 / (dn * (dn + 1.0)) * h - 3.0 * (dn + 1.0);
    const double correction = 1.0 - tie_term / (dn * dn * dn - dn);
    h = correction > 0.0 ? h / correction : 0.0;

    KruskalWallisResult r;
    r.h = h;
    r.df = k - 1;
    r.p_value = chi2_sf(h, r.df);
    return r;
}

}  // namespace binroute

#endif
