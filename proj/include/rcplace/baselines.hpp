#ifndef RCPLACE_BASELINES_HPP
#define RCPLACE_BASELINES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "core_model.hpp"
#include "free_space.hpp"
#include "geometry.hpp"
#include "routing_placer.hpp"

namespace rcplace {

// Every maximal empty rectangle of the layout, doubled space.
struct MaxEmptyRectSet {
    std::vector<Rect> rects;
};

// Brute force over all pairs of vertical edges: O(n^3 log n). For each strip
// between two edge coordinates the free y-gaps are maximal vertically; a gap
// is kept when it cannot be widened to either side.
inline MaxEmptyRectSet maximal_empty_rectangles(const ChipConfig& chip, std::span<const PlacedModule> modules) {
    const Coord cw = 2 * chip.width, ch = 2 * chip.height;
    std::vector<Rect> boxes;
    boxes.reserve(modules.size());
    for (const PlacedModule& m : modules) boxes.push_back(m.doubled());

    std::vector<Coord> xs{0, cw};
    for (const Rect& b : boxes) {
        xs.push_back(b.left());
        xs.push_back(b.right());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto blocked = [&](Coord x_out_lo, Coord x_out_hi, Coord ya, Coord yb) {
        for (const Rect& b : boxes)
            if (b.left() < x_out_hi && b.right() > x_out_lo && b.bottom() < yb && b.top() > ya) return true;
        return false;
    };

    MaxEmptyRectSet out;
    std::vector<std::pair<Coord, Coord>> spans;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const Coord xl = xs[i], xr = xs[j];
            spans.clear();
            for (const Rect& b : boxes)
                if (b.left() < xr && b.right() > xl) spans.emplace_back(b.bottom(), b.top());
            std::sort(spans.begin(), spans.end());
            Coord y = 0;
            auto consider = [&](Coord ya, Coord yb) {
                if (yb <= ya) return;
                // Widening by one doubled unit is enough: all edges are integral.
                const bool left_stuck = xl == 0 || blocked(xl - 1, xl, ya, yb);
                const bool right_stuck = xr == cw || blocked(xr, xr + 1, ya, yb);
                if (left_stuck && right_stuck) out.rects.push_back(Rect{xl, ya, xr - xl, yb - ya});
            };
            for (const auto& [b, t] : spans) {
                consider(y, b);
                y = std::max(y, t);
            }
            consider(y, ch);
        }
    }
    return out;
}

// KAMER with First Fit: the first maximal empty rectangle in bottom-left
// order (bottom, then left, then width, then height) that is large enough
// receives the module at its lower left corner.
inline PlacementResult kamer_first_fit(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                       const PlacementRequest& request) {
    detail::check_chip(chip);
    detail::check_request_dims(chip, request.w, request.h);
    detail::check_modules(chip, modules);
    const std::vector<Demand> demands = to_internal_demands(chip, request.demands);

    MaxEmptyRectSet mers = maximal_empty_rectangles(chip, modules);
    std::sort(mers.rects.begin(), mers.rects.end(), [](const Rect& a, const Rect& b) {
        return std::tie(a.y, a.x, a.w, a.h) < std::tie(b.y, b.x, b.w, b.h);
    });
    for (const Rect& r : mers.rects) {
        if (r.w >= 2 * request.w && r.h >= 2 * request.h) {
            const Point c{r.x + request.w, r.y + request.h};
            return placed_at(c, manhattan_cost(c, demands), mers.rects.size());
        }
    }
    return PlacementResult::rejected(mers.rects.size());
}

inline double euclidean_cost(Point p, std::span<const Demand> demands) {
    double c = 0.0;
    for (const Demand& d : demands)
        c += static_cast<double>(d.weight) *
             std::hypot(static_cast<double>(d.at.x - p.x), static_cast<double>(d.at.y - p.y));
    return c;
}

// NAO-style heuristic: among contour points (every vertex plus the projection
// of the weighted demand centroid onto every segment) pick the one with the
// smallest buswidth-weighted Euclidean distance. The returned cost is still
// the weighted Manhattan cost, so all algorithms are charged alike.
inline PlacementResult nao_heuristic(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                     const PlacementRequest& request) {
    const ExpandedScene scene = to_internal(chip, modules, request);
    const std::vector<Demand> demands = to_internal_demands(chip, request.demands);
    const Contour contour = find_contour_segments(scene);
    std::vector<Point> pts = contour_vertex_points(contour);
    if (pts.empty()) return PlacementResult::rejected();

    std::int64_t total = 0;
    double cx = 0.0, cy = 0.0;
    for (const Demand& d : demands) {
        total += d.weight;
        cx += static_cast<double>(d.weight) * static_cast<double>(d.at.x);
        cy += static_cast<double>(d.weight) * static_cast<double>(d.at.y);
    }
    if (total > 0) {
        cx /= static_cast<double>(total);
        cy /= static_cast<double>(total);
        auto snap = [](double v, Coord lo, Coord hi) { return std::clamp(static_cast<Coord>(std::llround(v)), lo, hi); };
        for (const Segment& s : contour.vertical) pts.push_back({s.from.x, snap(cy, s.from.y, s.to.y)});
        for (const Segment& s : contour.horizontal) pts.push_back({snap(cx, s.from.x, s.to.x), s.from.y});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }

    std::size_t best = 0;
    double best_cost = euclidean_cost(pts[0], demands);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double c = euclidean_cost(pts[i], demands);
        if (c < best_cost) {
            best_cost = c;
            best = i;
        }
    }
    return placed_at(pts[best], manhattan_cost(pts[best], demands), pts.size());
}

}  // namespace rcplace

#endif  // RCPLACE_BASELINES_HPP
