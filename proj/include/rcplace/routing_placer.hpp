#ifndef RCPLACE_ROUTING_PLACER_HPP
#define RCPLACE_ROUTING_PLACER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core_model.hpp"
#include "free_space.hpp"
#include "geometry.hpp"

namespace rcplace {

struct WeightedCoord {
    Coord value = 0;
    std::int64_t weight = 0;
};

// Lower weighted median: the smallest value v with sum_{x_i <= v} b_i >= B/2.
// It is the smallest minimizer of sum_i b_i |x_i - v|.
inline Coord weighted_median(std::span<const WeightedCoord> values) {
    std::vector<WeightedCoord> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const WeightedCoord& a, const WeightedCoord& b) { return a.value < b.value; });
    std::int64_t total = 0;
    for (const WeightedCoord& v : sorted) {
        if (v.weight < 0) throw InvalidInput("negative weight");
        total += v.weight;
    }
    if (total == 0) throw NoDemand("weighted median of zero total weight");
    std::int64_t cum = 0;
    for (const WeightedCoord& v : sorted) {
        cum += v.weight;
        if (2 * cum >= total) return v.value;
    }
    return sorted.back().value;
}

// Slope of sum_i b_i |x_i - x| at a point x that is not a demand coordinate:
// weight to the left minus weight to the right.
inline std::int64_t gradient(std::span<const WeightedCoord> values, Coord x) {
    std::int64_t g = 0;
    for (const WeightedCoord& v : values) {
        if (v.value < x)
            g += v.weight;
        else if (v.value > x)
            g -= v.weight;
    }
    return g;
}

inline std::vector<WeightedCoord> x_projection(std::span<const Demand> demands) {
    std::vector<WeightedCoord> out;
    out.reserve(demands.size());
    for (const Demand& d : demands) out.push_back({d.at.x, d.weight});
    return out;
}

inline std::vector<WeightedCoord> y_projection(std::span<const Demand> demands) {
    std::vector<WeightedCoord> out;
    out.reserve(demands.size());
    for (const Demand& d : demands) out.push_back({d.at.y, d.weight});
    return out;
}

inline std::int64_t gradient_x(std::span<const Demand> demands, Coord x) {
    return gradient(x_projection(demands), x);
}
inline std::int64_t gradient_y(std::span<const Demand> demands, Coord y) {
    return gradient(y_projection(demands), y);
}

// Lines x = x_med and y = y_med through the unconstrained optimum.
struct MedianAxes {
    Coord x = 0;
    Coord y = 0;

    Point point() const { return Point{x, y}; }
};

inline MedianAxes median_axes(std::span<const Demand> demands) {
    return MedianAxes{weighted_median(x_projection(demands)), weighted_median(y_projection(demands))};
}

enum class CandidateOrigin : std::uint8_t { median, axis_intersection, vertex };

struct Candidate {
    Point at;
    CandidateOrigin origin = CandidateOrigin::vertex;
};

// Every feasible point that can be a constrained local optimum: the median
// when feasible, the contour's crossings with both median axes, and every
// contour vertex. Sorted by point, without duplicates.
struct CandidateSet {
    std::vector<Candidate> points;

    std::size_t size() const { return points.size(); }
};

inline CandidateSet candidates(const ExpandedScene& scene, const Contour& contour, const MedianAxes& axes) {
    CandidateSet set;
    auto& pts = set.points;
    if (is_feasible(scene, axes.point())) pts.push_back({axes.point(), CandidateOrigin::median});
    for (const Segment& s : contour.vertical) {
        const Coord x = s.from.x;
        if (x == axes.x) pts.push_back({{x, std::clamp(axes.y, s.from.y, s.to.y)}, CandidateOrigin::axis_intersection});
        if (s.from.y <= axes.y && axes.y <= s.to.y) pts.push_back({{x, axes.y}, CandidateOrigin::axis_intersection});
    }
    for (const Segment& s : contour.horizontal) {
        const Coord y = s.from.y;
        if (y == axes.y) pts.push_back({{std::clamp(axes.x, s.from.x, s.to.x), y}, CandidateOrigin::axis_intersection});
        if (s.from.x <= axes.x && axes.x <= s.to.x) pts.push_back({{axes.x, y}, CandidateOrigin::axis_intersection});
    }
    for (Point p : contour_vertex_points(contour)) pts.push_back({p, CandidateOrigin::vertex});

    // Stable so that for equal points the earliest origin (median, then axis) survives.
    std::stable_sort(pts.begin(), pts.end(), [](const Candidate& a, const Candidate& b) { return a.at < b.at; });
    pts.erase(std::unique(pts.begin(), pts.end(), [](const Candidate& a, const Candidate& b) { return a.at == b.at; }),
              pts.end());
    return set;
}

// Prefix-scan state along one axis over the merged, deduplicated coordinates
// of candidates and demands: left[i] / right[i] are the weights at or left /
// right of coord[i], and cost[i] = sum_j b_j |x_j - coord[i]|.
struct AxisScan {
    std::vector<Coord> coord;
    std::vector<std::int64_t> left;
    std::vector<std::int64_t> right;
    std::vector<std::int64_t> cost;

    std::int64_t cost_at(Coord x) const {
        auto it = std::lower_bound(coord.begin(), coord.end(), x);
        return cost[static_cast<std::size_t>(it - coord.begin())];
    }
};

inline AxisScan scan_axis(std::span<const Coord> queries, std::span<const WeightedCoord> demands) {
    std::vector<WeightedCoord> merged;
    merged.reserve(queries.size() + demands.size());
    for (Coord q : queries) merged.push_back({q, 0});  // candidates carry no demand
    merged.insert(merged.end(), demands.begin(), demands.end());
    std::sort(merged.begin(), merged.end(),
              [](const WeightedCoord& a, const WeightedCoord& b) { return a.value < b.value; });

    AxisScan s;
    std::vector<std::int64_t> weight;
    for (const WeightedCoord& m : merged) {
        if (!s.coord.empty() && s.coord.back() == m.value) {
            weight.back() += m.weight;
        } else {
            s.coord.push_back(m.value);
            weight.push_back(m.weight);
        }
    }
    const std::size_t n = s.coord.size();
    if (n == 0) return s;
    s.left.assign(n, 0);
    s.right.assign(n, 0);
    s.cost.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) s.left[i] = (i ? s.left[i - 1] : 0) + weight[i];
    for (std::size_t i = n; i-- > 0;) s.right[i] = (i + 1 < n ? s.right[i + 1] : 0) + weight[i];
    for (std::size_t i = 0; i < n; ++i) s.cost[0] += weight[i] * (s.coord[i] - s.coord[0]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        s.cost[i + 1] = s.cost[i] + (s.left[i] - s.right[i + 1]) * (s.coord[i + 1] - s.coord[i]);
    return s;
}

// Cost of every candidate, in doubled space (twice the external cost).
// O((|L| + k) log(|L| + k)) by two independent prefix scans.
inline std::vector<std::int64_t> evaluate_costs(std::span<const Point> points, std::span<const Demand> demands) {
    std::vector<Coord> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (Point p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    const AxisScan sx = scan_axis(xs, x_projection(demands));
    const AxisScan sy = scan_axis(ys, y_projection(demands));
    std::vector<std::int64_t> out;
    out.reserve(points.size());
    for (Point p : points) out.push_back(sx.cost_at(p.x) + sy.cost_at(p.y));
    return out;
}

// Weighted Manhattan cost by direct summation, doubled space.
inline std::int64_t manhattan_cost(Point p, std::span<const Demand> demands) {
    std::int64_t c = 0;
    for (const Demand& d : demands) c += d.weight * (std::abs(d.at.x - p.x) + std::abs(d.at.y - p.y));
    return c;
}

inline PlacementResult placed_at(Point p, std::int64_t cost2, std::size_t candidates) {
    PlacementResult r;
    r.status = PlacementStatus::placed;
    r.x = Half{p.x};
    r.y = Half{p.y};
    r.cost = Half{cost2};
    r.candidates = candidates;
    return r;
}

// Optimal feasible center for a scene that is already expanded. Among equal
// costs the lexicographically smallest (x, y) wins.
inline PlacementResult place_in_scene(const ExpandedScene& scene, std::span<const Demand> demands) {
    std::int64_t total = 0;
    for (const Demand& d : demands) total += d.weight;

    if (total == 0) {
        const Contour contour = find_contour_segments(scene);
        const auto verts = contour_vertex_points(contour);
        if (verts.empty()) return PlacementResult::rejected();
        return placed_at(verts.front(), 0, verts.size());
    }

    const MedianAxes axes = median_axes(demands);
    if (is_feasible(scene, axes.point())) return placed_at(axes.point(), manhattan_cost(axes.point(), demands), 1);

    const Contour contour = find_contour_segments(scene);
    if (contour.empty()) return PlacementResult::rejected();
    const CandidateSet cands = candidates(scene, contour, axes);
    std::vector<Point> pts;
    pts.reserve(cands.size());
    for (const Candidate& c : cands.points) pts.push_back(c.at);
    const std::vector<std::int64_t> costs = evaluate_costs(pts, demands);

    // Candidates are sorted by point, so the first minimum is the tie-break winner.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (costs[i] < costs[best]) best = i;
    return placed_at(pts[best], costs[best], pts.size());
}

inline PlacementResult place(const ChipConfig& chip, std::span<const PlacedModule> modules,
                             const PlacementRequest& request) {
    const ExpandedScene scene = to_internal(chip, modules, request);
    const std::vector<Demand> demands = to_internal_demands(chip, request.demands);
    return place_in_scene(scene, demands);
}

}  // namespace rcplace

#endif  // RCPLACE_ROUTING_PLACER_HPP
