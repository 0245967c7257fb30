#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "random_scenes.hpp"
#include "rcplace/free_space.hpp"
#include "rcplace/oracles.hpp"

using namespace rcplace;

namespace {

ExpandedScene scene_of(Rect frame, std::vector<Rect> boxes) {
    ExpandedScene s;
    s.shrunk_chip = frame;
    for (std::size_t i = 0; i < boxes.size(); ++i) s.modules.push_back({boxes[i], clip_none, i});
    s.original_count = boxes.size();
    return s;
}

bool has(const std::vector<Segment>& segs, Segment s) { return std::find(segs.begin(), segs.end(), s) != segs.end(); }

}  // namespace

TEST(FindContour, EmptySceneIsTheFrame) {
    const ExpandedScene s = scene_of(Rect{4, 2, 24, 20}, {});
    const Contour c = find_contour_segments(s);
    EXPECT_EQ(c.vertical, (std::vector<Segment>{{{4, 2}, {4, 22}}, {{28, 2}, {28, 22}}}));
    EXPECT_EQ(c.horizontal, (std::vector<Segment>{{{4, 2}, {28, 2}}, {{4, 22}, {28, 22}}}));
    EXPECT_EQ(contour_vertex_points(c), (std::vector<Point>{{4, 2}, {4, 22}, {28, 2}, {28, 22}}));
}

TEST(FindContour, AnnulusHasEightSegments) {
    const ExpandedScene s = scene_of(Rect{4, 2, 24, 20}, {Rect{6, 8, 14, 10}});
    const Contour c = find_contour_segments(s);
    EXPECT_EQ(c.size(), 8u);
    EXPECT_TRUE(has(c.vertical, {{6, 8}, {6, 18}}));
    EXPECT_TRUE(has(c.vertical, {{20, 8}, {20, 18}}));
    EXPECT_TRUE(has(c.horizontal, {{6, 8}, {20, 8}}));
    EXPECT_TRUE(has(c.horizontal, {{6, 18}, {20, 18}}));
    const auto verts = contour_vertices(s, c);
    EXPECT_EQ(verts.size(), 8u);
    for (const ContourVertex& v : verts) EXPECT_NE(v.free_directions, dir_none);
}

TEST(FindContour, VerticalSeamBetweenAbuttingModules) {
    // [2,6] x [1,11] and [6,10] x [1,11], external units.
    const ExpandedScene s = scene_of(Rect{4, 2, 16, 20}, {Rect{4, 2, 8, 20}, Rect{12, 2, 8, 20}});
    const Contour c = find_contour_segments(s);
    EXPECT_TRUE(has(c.vertical, {{12, 2}, {12, 22}}));
    EXPECT_TRUE(is_feasible(s, {12, 10}));
    EXPECT_FALSE(is_feasible(s, {11, 10}));
}

// Modules stacked on top of each other leave a horizontal seam that only the
// vertical sweep can report as a segment.
TEST(FindContour, HorizontalSeamNeedsTheSecondSweep) {
    ExpandedScene s = scene_of(Rect{4, 2, 16, 20}, {Rect{4, 2, 16, 8}, Rect{4, 10, 16, 12}});
    for (auto& m : s.modules) m.clipped = clip_left | clip_right;
    s.modules[0].clipped |= clip_bottom;
    s.modules[1].clipped |= clip_top;
    const Contour c = find_contour_segments(s);
    EXPECT_TRUE(c.vertical.empty());
    EXPECT_EQ(c.horizontal, (std::vector<Segment>{{{4, 10}, {20, 10}}}));
}

TEST(FindContour, FourQuadrantsLeaveAPlusShapedSeam) {
    ExpandedScene s = scene_of(Rect{4, 4, 16, 16},
                               {Rect{4, 4, 8, 8}, Rect{12, 4, 8, 8}, Rect{4, 12, 8, 8}, Rect{12, 12, 8, 8}});
    const std::uint8_t sides[] = {clip_left | clip_bottom, clip_right | clip_bottom, clip_left | clip_top,
                                  clip_right | clip_top};
    for (std::size_t i = 0; i < 4; ++i) s.modules[i].clipped = sides[i];
    const Contour c = find_contour_segments(s);
    EXPECT_EQ(c.vertical, (std::vector<Segment>{{{12, 4}, {12, 20}}}));
    EXPECT_EQ(c.horizontal, (std::vector<Segment>{{{4, 12}, {20, 12}}}));
}

TEST(FindContour, IsolatedPointIsReportedOnce) {
    // A pinwheel of overlapping boxes whose edges all pass through (12, 12)
    // blocks every direction out of that point.
    ExpandedScene s = scene_of(Rect{4, 4, 16, 16},
                               {Rect{12, 10, 8, 10}, Rect{4, 12, 10, 8}, Rect{4, 4, 8, 10}, Rect{10, 4, 10, 8}});
    const std::uint8_t sides[] = {clip_right | clip_top, clip_left | clip_top, clip_left | clip_bottom,
                                  clip_right | clip_bottom};
    for (std::size_t i = 0; i < 4; ++i) s.modules[i].clipped = sides[i];
    const Contour c = find_contour_segments(s);
    EXPECT_EQ(c.vertical, (std::vector<Segment>{{{12, 12}, {12, 12}}}));
    EXPECT_TRUE(c.horizontal.empty());
    EXPECT_EQ(contour_vertex_points(c), (std::vector<Point>{{12, 12}}));
    EXPECT_EQ(contour_vertices(s, c).front().free_directions, dir_none);
}

TEST(FindContour, FullyBlockedSceneHasNoContour) {
    ExpandedScene s = scene_of(Rect{4, 2, 16, 20}, {Rect{4, 2, 16, 20}});
    s.modules[0].clipped = clip_left | clip_right | clip_bottom | clip_top;
    EXPECT_TRUE(find_contour_segments(s).empty());
}

TEST(FindContour, DegenerateShrunkChip) {
    // Request as wide as the chip: the shrunk chip is the line x = 8.
    const ChipConfig chip{8, 10};
    const ExpandedScene s = to_internal(chip, std::vector{PlacedModule::at_units(0, 4, 2, 2)}, 8, 2);
    const Contour c = find_contour_segments(s);
    const auto grid = oracle::raster_feasible_set(chip, std::vector{PlacedModule::at_units(0, 4, 2, 2)}, 8, 2);
    for (std::size_t j = 0; j < grid.ny; ++j) {
        const Point p = grid.point(0, j);
        EXPECT_EQ(is_feasible(s, p), static_cast<bool>(grid.feasible[grid.index(0, j)])) << p.y;
        EXPECT_EQ(on_contour(c, p), static_cast<bool>(grid.boundary[grid.index(0, j)])) << p.y;
    }
}

TEST(IsFeasible, BoundaryAndInterior) {
    const ExpandedScene s = scene_of(Rect{4, 2, 24, 20}, {Rect{6, 8, 14, 10}});
    EXPECT_TRUE(is_feasible(s, {6, 10}));
    EXPECT_TRUE(is_feasible(s, {20, 18}));
    EXPECT_FALSE(is_feasible(s, {10, 10}));
    EXPECT_FALSE(is_feasible(s, {3, 10}));
}

TEST(IsFeasible, MatchesRasterOnRandomPoints) {
    std::mt19937_64 rng(31);
    const auto lay = test_support::random_layout(rng, {.max_side = 40, .max_modules = 10});
    const ExpandedScene s = to_internal(lay.chip, lay.modules, lay.request);
    const auto grid = oracle::raster_feasible_set(lay.chip, lay.modules, lay.request.w, lay.request.h);
    for (int i = 0; i < 1000; ++i) {
        const Point p{test_support::draw(rng, 0, 2 * lay.chip.width), test_support::draw(rng, 0, 2 * lay.chip.height)};
        EXPECT_EQ(is_feasible(s, p), grid.feasible_at(p));
    }
}

TEST(FindContour, VerticesAreFeasibleAndSegmentsSorted) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 48, .max_modules = 12, .half_positions = true});
        const ExpandedScene s = to_internal(lay.chip, lay.modules, lay.request);
        const Contour c = find_contour_segments(s);
        for (Point p : contour_vertex_points(c)) ASSERT_TRUE(is_feasible(s, p));
        for (const Segment& seg : c.vertical) ASSERT_TRUE(seg.vertical() && seg.from.y <= seg.to.y);
        for (const Segment& seg : c.horizontal) ASSERT_TRUE(seg.from.y == seg.to.y && seg.from.x < seg.to.x);
        ASSERT_TRUE(std::is_sorted(c.vertical.begin(), c.vertical.end(),
                                   [](const Segment& a, const Segment& b) { return a.from < b.from; }));
        ASSERT_TRUE(std::is_sorted(c.horizontal.begin(), c.horizontal.end(), [](const Segment& a, const Segment& b) {
            return std::pair{a.from.y, a.from.x} < std::pair{b.from.y, b.from.x};
        }));
    }
}

TEST(FindContour, Deterministic) {
    std::mt19937_64 rng(33);
    const auto lay = test_support::random_layout(rng, {.max_side = 64, .max_modules = 40, .module_divisor = 4});
    const ExpandedScene s = to_internal(lay.chip, lay.modules, lay.request);
    const Contour a = find_contour_segments(s);
    const Contour b = find_contour_segments(s);
    EXPECT_EQ(a.vertical, b.vertical);
    EXPECT_EQ(a.horizontal, b.horizontal);
}

TEST(FindContour, SegmentCountBound) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 300; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 128, .max_modules = 80, .half_positions = t % 2 == 0, .module_divisor = 6});
        const ExpandedScene s = to_internal(lay.chip, lay.modules, lay.request);
        EXPECT_LE(find_contour_segments(s).size(), 4 * s.modules.size() + 4);
    }
}

TEST(FindContour, ExactAgainstRaster) {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 200; ++t) {
        const auto lay = test_support::random_layout(rng, {.max_side = 24, .max_modules = 8, .half_positions = t % 2 == 0});
        const ExpandedScene s = to_internal(lay.chip, lay.modules, lay.request);
        const Contour c = find_contour_segments(s);
        const auto grid = oracle::raster_feasible_set(lay.chip, lay.modules, lay.request.w, lay.request.h);
        EXPECT_EQ(c.empty(), !grid.any_feasible());
        for (std::size_t j = 0; j < grid.ny; ++j)
            for (std::size_t i = 0; i < grid.nx; ++i)
                ASSERT_EQ(on_contour(c, grid.point(i, j)), static_cast<bool>(grid.boundary[grid.index(i, j)]))
                    << "scene " << t;
    }
}
