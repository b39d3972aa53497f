#include <gtest/gtest.h>

#include "binroute/instance.hpp"
#include "binroute/schedule.hpp"
#include "support/golden.hpp"
#include "support/synthetic.hpp"

using namespace binroute;

namespace {

Instance two_point_instance() {
    Instance inst;
    inst.name = "two";
    inst.n_points = 2;
    inst.travel = Matrix(3, 3);
    inst.travel(0, 1) = 4.0;
    inst.travel(1, 0) = 4.5;
    inst.travel(0, 2) = 6.0;
    inst.travel(2, 0) = 6.5;
    inst.travel(1, 2) = 5.0;
    inst.travel(2, 1) = 5.5;
    inst.daily_waste = {1.0, 2.0};
    return inst;
}

}  // namespace

TEST(RouteTime, SinglePointOnlyUnloadAndService) {
    Instance inst;
    inst.n_points = 1;
    inst.travel = Matrix(2, 2);  // all zero
    inst.daily_waste = {1.0};
    BinCatalog catalog{{{5.0, 0.70, 1.0}}};
    FleetParams fleet{10.0, 1, 8.0, 100.0, 1.0};
    EXPECT_NEAR(route_time({1}, {0}, inst, catalog, fleet), 8.70, 1e-12);
}

TEST(RouteTime, TwoPointHandComputation) {
    const Instance inst = two_point_instance();
    BinCatalog catalog{{{5.0, 1.0, 1.0}, {5.0, 2.0, 1.0}}};
    FleetParams fleet{10.0, 1, 8.0, 100.0, 1.0};
    // 8 + 4.0 + 1.0 + 5.0 + 2.0 + 6.5
    EXPECT_NEAR(route_time({1, 2}, {0, 1}, inst, catalog, fleet), 26.5, 1e-12);
}

TEST(RouteTime, RejectsUnknownPointAndMissingBin) {
    const Instance inst = two_point_instance();
    BinCatalog catalog{{{5.0, 1.0, 1.0}}};
    FleetParams fleet{10.0, 1, 8.0, 100.0, 1.0};
    EXPECT_THROW(route_time({3}, {0, 0}, inst, catalog, fleet), Error);
    EXPECT_THROW(route_time({1}, {-1, 0}, inst, catalog, fleet), Error);
    EXPECT_THROW(route_time({}, {0, 0}, inst, catalog, fleet), Error);
}

TEST(RouteTime, ReversalInvariantOnSymmetricMatrices) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Problem p = testdata::synthetic_problem(5, 4, seed);
        for (int i = 0; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) p.instance.travel(j, i) = p.instance.travel(i, j);
        const std::vector<int> bins = {0, 1, 2, 0, 1};
        Route route = {3, 1, 5, 2};
        const double forward = route_time(route, bins, p.instance, p.catalog, p.fleet);
        std::reverse(route.begin(), route.end());
        EXPECT_NEAR(route_time(route, bins, p.instance, p.catalog, p.fleet), forward, 1e-9);
    }
}

TEST(AccumulateWaste, PublishedPointOne) {
    // W = 1.27, visited Wednesday and Saturday of a Mon-Sun week.
    Instance inst;
    inst.n_points = 1;
    inst.travel = Matrix(2, 2);
    inst.daily_waste = {1.27};
    const Horizon week = Horizon::standard_week();
    BoolMat mask(1, 7);
    mask(0, 2) = 1;
    mask(0, 5) = 1;
    const Accumulation acc = accumulate_waste(mask, inst, week);
    const std::vector<double> expected = {2.54, 3.81, 5.08, 1.27, 2.54, 3.81, 1.27};
    for (int t = 0; t < 7; ++t) EXPECT_NEAR(acc.w(0, t), expected[t], 1e-12) << "day " << t;
    EXPECT_NEAR(acc.w_max[0], 5.08, 1e-12);
}

TEST(AccumulateWaste, DailyVisitsCarryOverTheRestDay) {
    Instance inst;
    inst.n_points = 1;
    inst.travel = Matrix(2, 2);
    inst.daily_waste = {0.8};
    const Horizon week = Horizon::standard_week();
    BoolMat mask(1, 7);
    for (int t = 0; t < 6; ++t) mask(0, t) = 1;
    const Accumulation acc = accumulate_waste(mask, inst, week);
    for (int t = 1; t < 6; ++t) EXPECT_NEAR(acc.w(0, t), 0.8, 1e-12);
    EXPECT_NEAR(acc.w(0, 6), 0.8, 1e-12);   // Sunday accrues one day
    EXPECT_NEAR(acc.w(0, 0), 1.6, 1e-12);   // Monday carries the rest day
    EXPECT_NEAR(acc.w_max[0], 1.6, 1e-12);
}

// Fixed-point oracle: iterate the end-of-day recurrence from zero until it
// converges and compare against the closed-form computation.
TEST(AccumulateWaste, MatchesFixedPointIteration) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const Problem p = testdata::synthetic_problem(4, 7, seed);
        const BoolMat mask = testdata::random_valid_mask(p, seed);
        const Accumulation acc = accumulate_waste(mask, p.instance, p.horizon);

        const int days = p.horizon.n_days;
        for (int i = 0; i < 4; ++i) {
            std::vector<double> w(days, 0.0);
            for (int iter = 0; iter < 500; ++iter)
                for (int t = 0; t < days; ++t) {
                    const int prev = (t + days - 1) % days;
                    w[t] = p.instance.daily_waste[i] + w[prev] * (mask(i, prev) ? 0.0 : 1.0);
                }
            for (int t = 0; t < days; ++t)
                EXPECT_NEAR(acc.w(i, t), w[t], 1e-9) << "seed " << seed << " point " << i;
        }
    }
}

TEST(AccumulateWaste, RejectsUnvisitedPointAndRestDayVisit) {
    const Problem p = testdata::synthetic_problem(2, 4, 7);
    BoolMat mask(2, 4);
    mask(0, 0) = 1;  // point 2 never visited
    EXPECT_THROW(accumulate_waste(mask, p.instance, p.horizon), UnvisitedPointError);
    mask(1, 3) = 1;  // day 4 rests
    EXPECT_THROW(accumulate_waste(mask, p.instance, p.horizon), Error);
}

TEST(AccumulateWaste, ExtraVisitNeverRaisesPeak) {
    for (uint64_t seed = 100; seed < 140; ++seed) {
        const Problem p = testdata::synthetic_problem(3, 7, seed);
        BoolMat mask = testdata::random_valid_mask(p, seed);
        const Accumulation before = accumulate_waste(mask, p.instance, p.horizon);
        // flip one unvisited working-day bit
        bool flipped = false;
        for (int t = 0; t < 7 && !flipped; ++t)
            if (!p.horizon.is_rest(t) && !mask(1, t)) {
                mask(1, t) = 1;
                flipped = true;
            }
        if (!flipped) continue;
        const Accumulation after = accumulate_waste(mask, p.instance, p.horizon);
        EXPECT_LE(after.w_max[1], before.w_max[1] + 1e-12);
    }
}

TEST(RouteLoads, PublishedMondayFirstRoute) {
    const Problem p = testdata::i12_1_problem();
    Matrix acc(12, 7);
    acc(6, 0) = 5.28;   // point 7
    acc(5, 0) = 2.42;   // point 6
    acc(11, 0) = 2.66;  // point 12
    const LoadProfile prof = route_loads({7, 6, 12}, acc, 0, p.fleet);
    const std::vector<double> expected = {0.00, 5.28, 7.70, 10.36};
    ASSERT_EQ(prof.cumulative.size(), expected.size());
    for (size_t k = 0; k < expected.size(); ++k)
        EXPECT_NEAR(prof.cumulative[k], expected[k], 1e-9);
    EXPECT_FALSE(prof.overflow);
}

TEST(RouteLoads, ZeroPickupsAndOverflowFlag) {
    const Problem p = testdata::i12_1_problem();
    Matrix zero(12, 7);
    const LoadProfile none = route_loads({1, 2, 3}, zero, 0, p.fleet);
    for (double v : none.cumulative) EXPECT_EQ(v, 0.0);

    Matrix acc(12, 7);
    acc(6, 0) = 5.28;
    acc(5, 0) = 2.42;
    acc(11, 0) = 2.66;
    acc(9, 0) = 2.34;  // point 10 pushes past Q = 12
    const LoadProfile over = route_loads({7, 6, 12, 10}, acc, 0, p.fleet);
    EXPECT_TRUE(over.overflow);
    EXPECT_NEAR(over.cumulative.back(), 12.70, 1e-9);
}

TEST(Evaluate, OverallIsBinPlusRouting) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        const Problem p = testdata::synthetic_problem(5, 5, seed);
        Chromosome c = testdata::random_chromosome(p, seed);
        c = repair(c, p.instance, p.horizon, p.catalog);
        const Schedule s = decode(c, p.instance, p.horizon, p.catalog, p.fleet);
        const EvalReport r = evaluate(s, p.instance, p.horizon, p.catalog, p.fleet);
        EXPECT_NEAR(r.overall_cost, r.bin_cost + r.routing_cost, 1e-9);
        EXPECT_EQ(r.feasible, r.violations.empty());
    }
}

TEST(Evaluate, FlagsExcessRoutesOnADay) {
    const Problem p = testdata::i12_1_problem();
    const Chromosome c = testdata::golden_chromosome();
    Schedule s = decode(c, p.instance, p.horizon, p.catalog, p.fleet);
    // Split Monday R2 into two singleton routes: three routes on a two-vehicle
    // day.
    Route r2 = s.routes[0][1];
    s.routes[0].pop_back();
    s.routes[0].push_back({r2[0]});
    s.routes[0].push_back({r2[1], r2[2], r2[3]});
    const EvalReport r = evaluate(s, p.instance, p.horizon, p.catalog, p.fleet);
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.excess_routes[0], 1);
    bool found = false;
    for (const auto& v : r.violations)
        if (v.constraint == "2g" && v.day == 0 && v.magnitude == 1.0) found = true;
    EXPECT_TRUE(found);
}

TEST(Evaluate, FlagsRestDayRouteAndStaleAccumulation) {
    const Problem p = testdata::i12_1_problem();
    const Chromosome c = testdata::golden_chromosome();
    Schedule s = decode(c, p.instance, p.horizon, p.catalog, p.fleet);
    s.routes[6].push_back({1});
    Schedule stale = s;
    stale.accumulation(0, 1) += 0.5;
    const EvalReport rest = evaluate(s, p.instance, p.horizon, p.catalog, p.fleet);
    bool has_2e = false;
    for (const auto& v : rest.violations) has_2e = has_2e || v.constraint == "2e";
    EXPECT_TRUE(has_2e);

    s.routes[6].clear();
    const EvalReport drift = evaluate(stale, p.instance, p.horizon, p.catalog, p.fleet);
    bool has_recurrence = false;
    for (const auto& v : drift.violations)
        has_recurrence = has_recurrence || v.constraint == "2k" || v.constraint == "2l";
    EXPECT_TRUE(has_recurrence);
}

TEST(Evaluate, RejectsStructurallyBrokenSchedules) {
    const Problem p = testdata::i12_1_problem();
    const Chromosome c = testdata::golden_chromosome();
    Schedule s = decode(c, p.instance, p.horizon, p.catalog, p.fleet);
    Schedule dup = s;
    dup.routes[0].push_back({7});  // 7 already served on Monday
    EXPECT_THROW(evaluate(dup, p.instance, p.horizon, p.catalog, p.fleet), Error);
    Schedule empty_route = s;
    empty_route.routes[1].push_back({});
    EXPECT_THROW(evaluate(empty_route, p.instance, p.horizon, p.catalog, p.fleet), Error);
}

TEST(DeriveFleet, CeilingRuleAndShiftFormula) {
    Problem p = testdata::synthetic_problem(12, 7, 1);
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j) p.instance.travel(i, j) = i == j ? 0.0 : 6.0;
    const Horizon week = Horizon::standard_week();
    const FleetDerivation d = derive_fleet(p.instance, week);
    EXPECT_EQ(d.n_vehicles, 2);
    EXPECT_EQ(d.shift_minutes, 78.0);  // (13*13 - 13) * 6 / (2 * 1 * 6)

    Problem large = testdata::synthetic_problem(4, 4, 2);
    large.instance.n_points = 163;  // only the ceiling matters here
    large.instance.travel = Matrix(164, 164, 1.0);
    for (int i = 0; i < 164; ++i) large.instance.travel(i, i) = 0.0;
    EXPECT_EQ(derive_fleet(large.instance, week).n_vehicles, 17);
}

TEST(DeriveFleet, RefusesSingleVehicleFleet) {
    const Problem p = testdata::synthetic_problem(5, 4, 3);
    EXPECT_THROW(derive_fleet(p.instance, p.horizon), Error);
}

TEST(Types, ValidationCatchesBadInputs) {
    Instance inst = two_point_instance();
    EXPECT_NO_THROW(inst.validate());
    inst.travel(1, 1) = 2.0;
    EXPECT_THROW(inst.validate(), Error);

    Horizon h = Horizon::standard_week();
    EXPECT_EQ(h.working_days(), 6);
    EXPECT_EQ(h.max_rest_run(), 1);
    EXPECT_THROW(Horizon::make(3, {1, 2, 3}), Error);

    BinCatalog catalog{{{1.0, 1.0, 0.0}}};
    EXPECT_THROW(catalog.validate(), Error);
    EXPECT_NO_THROW(default_catalog().validate());
    EXPECT_NEAR(default_catalog().max_capacity(), 5.6, 1e-12);
}
