#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "random_scenes.hpp"
#include "rcplace/oracles.hpp"
#include "rcplace/routing_placer.hpp"

using namespace rcplace;
using test_support::draw;

namespace {

std::int64_t axis_cost(const std::vector<WeightedCoord>& v, Coord x) {
    std::int64_t c = 0;
    for (const WeightedCoord& w : v) c += w.weight * std::abs(w.value - x);
    return c;
}

}  // namespace

TEST(WeightedMedian, LowerMedianOnTies) {
    EXPECT_EQ(weighted_median(std::vector<WeightedCoord>{{2, 1}, {10, 1}}), 2);
    EXPECT_EQ(weighted_median(std::vector<WeightedCoord>{{2, 3}, {10, 1}}), 2);
    EXPECT_EQ(weighted_median(std::vector<WeightedCoord>{{10, 1}, {2, 1}, {2, 0}}), 2);
}

TEST(WeightedMedian, ThreePointExampleMatchesExhaustiveMinimum) {
    const std::vector<WeightedCoord> v{{1, 1}, {5, 1}, {9, 2}};
    EXPECT_EQ(weighted_median(v), 5);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Coord x = 0; x <= 12; ++x) best = std::min(best, axis_cost(v, x));
    EXPECT_EQ(best, 12);
    for (Coord x = 5; x <= 9; ++x) EXPECT_EQ(axis_cost(v, x), 12);
    EXPECT_GT(axis_cost(v, 4), 12);
    EXPECT_GT(axis_cost(v, 10), 12);
}

TEST(WeightedMedian, ZeroTotalWeightThrows) {
    EXPECT_THROW(weighted_median(std::vector<WeightedCoord>{{1, 0}}), NoDemand);
    EXPECT_THROW(weighted_median(std::vector<WeightedCoord>{}), NoDemand);
}

TEST(WeightedMedian, IsSmallestMinimizer) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        std::vector<WeightedCoord> v(static_cast<std::size_t>(draw(rng, 1, 8)));
        for (auto& w : v) w = {draw(rng, 0, 30), draw(rng, 0, 5)};
        v.front().weight = std::max<std::int64_t>(v.front().weight, 1);
        Coord best_x = -1;
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (Coord x = -2; x <= 32; ++x)
            if (const auto c = axis_cost(v, x); c < best) best = c, best_x = x;
        EXPECT_EQ(weighted_median(v), best_x);
    }
}

TEST(Gradient, SignsAndFiniteDifferences) {
    const std::vector<WeightedCoord> v{{2, 3}, {6, 1}, {9, 2}};
    EXPECT_EQ(gradient(v, 0), -6);
    EXPECT_EQ(gradient(v, 20), 6);
    // Between demands the gradient is the slope of the cost.
    for (Coord x : {3, 4, 7, 8}) EXPECT_EQ(gradient(v, x), axis_cost(v, x + 1) - axis_cost(v, x));
}

TEST(Gradient, AxisHelpers) {
    const std::vector<Demand> d{{{2, 7}, 3}, {{6, 1}, 1}};
    EXPECT_EQ(gradient_x(d, 0), -4);
    EXPECT_EQ(gradient_y(d, 10), 4);
}

TEST(EvaluateCosts, Examples) {
    const std::vector<Demand> d{{{5, 5}, 2}};
    EXPECT_EQ(evaluate_costs(std::vector<Point>{{8, 9}}, d), std::vector<std::int64_t>{14});
    EXPECT_EQ(evaluate_costs(std::vector<Point>{{5, 5}}, d), std::vector<std::int64_t>{0});
}

TEST(EvaluateCosts, ScanMatchesDoubleLoop) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        std::vector<Point> pts(50);
        std::vector<Demand> demands(20);
        for (Point& p : pts) p = {draw(rng, -50, 50), draw(rng, -50, 50)};
        for (Demand& d : demands) d = {{draw(rng, -50, 50), draw(rng, -50, 50)}, draw(rng, 0, 10)};
        const auto costs = evaluate_costs(pts, demands);
        for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(costs[i], manhattan_cost(pts[i], demands));
    }
}

TEST(Candidates, FeasibleMedianShortCircuits) {
    const ChipConfig chip{16, 12};
    const PlacementRequest req{2, 2, {{Half::units(8), Half::units(6), 3}}};
    const PlacementResult r = place(chip, std::vector<PlacedModule>{}, req);
    ASSERT_TRUE(r.placed());
    EXPECT_EQ(r.x, Half::units(8));
    EXPECT_EQ(r.y, Half::units(6));
    EXPECT_EQ(r.cost, Half{});
    EXPECT_EQ(r.candidates, 1u);
}

TEST(Candidates, DemandOutsideShrunkChipIsClamped) {
    const ChipConfig chip{16, 12};
    const PlacementRequest req{4, 2, {{Half::units(0), Half::units(0), 1}}};
    const PlacementResult r = place(chip, std::vector<PlacedModule>{}, req);
    EXPECT_EQ(r.x, Half::units(2));
    EXPECT_EQ(r.y, Half::units(1));
    EXPECT_EQ(r.cost, Half::units(3));
}

TEST(Candidates, MedianInsideHole) {
    const ChipConfig chip{16, 12};
    const std::vector<PlacedModule> mods{PlacedModule::at_units(5, 5, 3, 3)};
    const ExpandedScene scene = to_internal(chip, mods, 4, 2);
    const Contour contour = find_contour_segments(scene);
    const MedianAxes axes{13, 13};  // inside [6,20] x [8,18]
    const CandidateSet set = candidates(scene, contour, axes);
    const std::vector<Point> hole{{6, 8}, {6, 18}, {20, 8}, {20, 18}};
    for (Point p : hole)
        EXPECT_NE(std::find_if(set.points.begin(), set.points.end(), [&](const Candidate& c) { return c.at == p; }),
                  set.points.end());
    for (Point p : std::vector<Point>{{6, 13}, {20, 13}, {13, 8}, {13, 18}})
        EXPECT_NE(std::find_if(set.points.begin(), set.points.end(),
                               [&](const Candidate& c) { return c.at == p && c.origin == CandidateOrigin::axis_intersection; }),
                  set.points.end());
}

TEST(Place, FullyCoveredChipIsRejected) {
    const ChipConfig chip{10, 10};
    const std::vector<PlacedModule> mods{PlacedModule::at_units(0, 0, 10, 10)};
    const PlacementRequest req{1, 1, {{Half::units(5), Half::units(5), 1}}};
    EXPECT_FALSE(place(chip, mods, req).placed());
}

TEST(Place, ZeroWeightsPickBottomLeftVertex) {
    const ChipConfig chip{16, 12};
    const std::vector<PlacedModule> mods{PlacedModule::at_units(0, 0, 4, 4)};
    const PlacementRequest req{2, 2, {{Half::units(8), Half::units(6), 0}}};
    const PlacementResult r = place(chip, mods, req);
    ASSERT_TRUE(r.placed());
    EXPECT_EQ(r.center_doubled(), (Point{2, 10}));
    EXPECT_EQ(r.cost, Half{});
}

TEST(Place, AnnulusFixture) {
    // 16 x 12 chip, core module (5,5,3,3), 4 x 2 request tied to the core
    // center (6.5, 6.5) with weight 3 and to the left border midpoint (0, 6)
    // with weight 1. The median (6.5, 6.5) is inside the expanded core.
    const ChipConfig chip{16, 12};
    const std::vector<PlacedModule> mods{PlacedModule::at_units(5, 5, 3, 3)};
    const PlacementRequest req{4, 2, {{Half{13}, Half{13}, 3}, {Half::units(0), Half::units(6), 1}}};
    const PlacementResult r = place(chip, mods, req);
    const auto want = oracle::grid_optimal_placement(chip, mods, req);
    ASSERT_TRUE(r.placed() && want);
    EXPECT_EQ(r.center_doubled(), want->center);
    EXPECT_EQ(r.cost.twice, want->cost);
    // Left edge of the hole at the median's height.
    EXPECT_EQ(r.x.str(), "3");
    EXPECT_EQ(r.y.str(), "6.5");
    EXPECT_EQ(r.cost.str(), "14");
}

TEST(Place, MatchesGridOracle) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 400; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 24, .max_modules = 8, .max_demands = 6, .half_positions = t % 2 == 0});
        const PlacementResult r = place(lay.chip, lay.modules, lay.request);
        const auto want = oracle::grid_optimal_placement(lay.chip, lay.modules, lay.request);
        ASSERT_EQ(r.placed(), want.has_value()) << t;
        if (!want) continue;
        EXPECT_EQ(r.cost.twice, want->cost) << t;
        EXPECT_EQ(r.center_doubled(), want->center) << t;
    }
}

// The exhaustive optimum is always the median or a contour point in the set.
TEST(Candidates, ContainGridOptimum) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 300; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 24, .max_modules = 8, .max_demands = 6});
        const auto want = oracle::grid_optimal_placement(lay.chip, lay.modules, lay.request);
        const auto demands = to_internal_demands(lay.chip, lay.request.demands);
        std::int64_t total = 0;
        for (const Demand& d : demands) total += d.weight;
        if (!want || total == 0) continue;
        const ExpandedScene scene = to_internal(lay.chip, lay.modules, lay.request);
        const CandidateSet set = candidates(scene, find_contour_segments(scene), median_axes(demands));
        EXPECT_NE(std::find_if(set.points.begin(), set.points.end(), [&](const Candidate& c) { return c.at == want->center; }),
                  set.points.end())
            << t;
    }
}

TEST(Place, ScaleInvariance) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 200; ++t) {
        auto lay = test_support::random_layout(rng, {.max_side = 24, .max_modules = 8, .max_demands = 6});
        const PlacementResult a = place(lay.chip, lay.modules, lay.request);
        const std::int64_t k = draw(rng, 2, 5);
        for (auto& d : lay.request.demands) d.buswidth *= k;
        const PlacementResult b = place(lay.chip, lay.modules, lay.request);
        ASSERT_EQ(a.placed(), b.placed());
        if (!a.placed()) continue;
        EXPECT_EQ(a.center_doubled(), b.center_doubled());
        EXPECT_EQ(a.cost.twice * k, b.cost.twice);
    }
}

TEST(Place, TranslationEquivariance) {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 200; ++t) {
        auto lay = test_support::random_layout(rng, {.max_side = 24, .max_modules = 8, .max_demands = 6});
        const PlacementResult a = place(lay.chip, lay.modules, lay.request);
        const std::int64_t dx = draw(rng, 0, 7), dy = draw(rng, 0, 7);
        // Translate inside a larger chip whose extra margin is walled off.
        ChipConfig big{lay.chip.width + dx, lay.chip.height + dy};
        std::vector<PlacedModule> mods = lay.modules;
        for (auto& m : mods) {
            m.x = m.x + Half::units(dx);
            m.y = m.y + Half::units(dy);
        }
        if (dx) mods.push_back(PlacedModule::at_units(0, 0, dx, big.height));
        if (dy) mods.push_back(PlacedModule::at_units(dx, 0, lay.chip.width, dy));
        PlacementRequest req = lay.request;
        for (auto& d : req.demands) {
            d.x = d.x + Half::units(dx);
            d.y = d.y + Half::units(dy);
        }
        const PlacementResult b = place(big, mods, req);
        ASSERT_EQ(a.placed(), b.placed());
        if (!a.placed()) continue;
        EXPECT_EQ(a.cost, b.cost);
        EXPECT_EQ(a.center_doubled(), (Point{b.x.twice - 2 * dx, b.y.twice - 2 * dy}));
    }
}

TEST(Place, FeasibleMedianIsOptimal) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 20, .max_modules = 3, .max_demands = 5});
        const auto demands = to_internal_demands(lay.chip, lay.request.demands);
        std::int64_t total = 0;
        for (const Demand& d : demands) total += d.weight;
        if (total == 0) continue;
        const ExpandedScene scene = to_internal(lay.chip, lay.modules, lay.request);
        const MedianAxes m = median_axes(demands);
        if (!is_feasible(scene, m.point())) continue;
        const auto want = oracle::grid_optimal_placement(lay.chip, lay.modules, lay.request);
        ASSERT_TRUE(want);
        EXPECT_EQ(manhattan_cost(m.point(), demands), want->cost);
        EXPECT_EQ(place_in_scene(scene, demands).center_doubled(), m.point());
    }
}
