#ifndef RCPLACE_ORACLES_HPP
#define RCPLACE_ORACLES_HPP

// Brute-force reference implementations. They work from the original module
// list and share nothing with the transform, sweep or placer beyond the plain
// value types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "core_model.hpp"
#include "geometry.hpp"

namespace rcplace::oracle {

// Feasibility of every center on the doubled integer lattice over the region
// where the new module stays on the chip. `boundary` marks feasible centers
// where the new module touches the chip border or an existing module.
struct RasterGrid {
    Coord x0 = 0, y0 = 0;  // doubled coordinates of cell (0, 0)
    std::size_t nx = 0, ny = 0;
    std::vector<std::uint8_t> feasible;
    std::vector<std::uint8_t> boundary;

    std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
    Point point(std::size_t i, std::size_t j) const {
        return Point{x0 + static_cast<Coord>(i), y0 + static_cast<Coord>(j)};
    }
    bool feasible_at(Point p) const {
        if (p.x < x0 || p.y < y0) return false;
        const auto i = static_cast<std::size_t>(p.x - x0), j = static_cast<std::size_t>(p.y - y0);
        return i < nx && j < ny && feasible[index(i, j)];
    }
    bool any_feasible() const { return std::find(feasible.begin(), feasible.end(), 1) != feasible.end(); }
};

inline constexpr std::size_t max_raster_cells = 1'000'000;

// Per-center check of the w x h module against every original module.
inline RasterGrid raster_feasible_set(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                      std::int64_t w, std::int64_t h) {
    RasterGrid g;
    if (w > chip.width || h > chip.height) return g;
    // Center c (doubled) keeps the module [c - w, c + w] (doubled) on the chip.
    g.x0 = w;
    g.y0 = h;
    g.nx = static_cast<std::size_t>(2 * chip.width - 2 * w + 1);
    g.ny = static_cast<std::size_t>(2 * chip.height - 2 * h + 1);
    if (g.nx * g.ny > max_raster_cells) throw GridTooLarge("raster oracle limited to 10^6 cells");
    g.feasible.assign(g.nx * g.ny, 0);
    g.boundary.assign(g.nx * g.ny, 0);
    for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const Point c = g.point(i, j);
            const Coord l = c.x - w, r = c.x + w, b = c.y - h, t = c.y + h;
            bool ok = true;
            bool touches = l == 0 || b == 0 || r == 2 * chip.width || t == 2 * chip.height;
            for (const PlacedModule& m : modules) {
                const Coord ml = m.x.twice, mr = m.x.twice + 2 * m.w;
                const Coord mb = m.y.twice, mt = m.y.twice + 2 * m.h;
                if (l < mr && ml < r && b < mt && mb < t) {
                    ok = false;
                    break;
                }
                if (l <= mr && ml <= r && b <= mt && mb <= t) touches = true;
            }
            g.feasible[g.index(i, j)] = ok;
            g.boundary[g.index(i, j)] = ok && touches;
        }
    }
    return g;
}

struct GridOptimum {
    Point center;       // doubled
    std::int64_t cost;  // doubled
};

// Exhaustive minimum over all feasible lattice centers; ties go to the
// smallest x, then the smallest y.
inline std::optional<GridOptimum> grid_optimal_placement(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                                         const PlacementRequest& request) {
    const RasterGrid g = raster_feasible_set(chip, modules, request.w, request.h);
    std::optional<GridOptimum> best;
    for (std::size_t i = 0; i < g.nx; ++i) {
        for (std::size_t j = 0; j < g.ny; ++j) {
            if (!g.feasible[g.index(i, j)]) continue;
            const Point c = g.point(i, j);
            std::int64_t cost = 0;
            for (const DemandPoint& d : request.demands)
                cost += d.buswidth * (std::abs(d.x.twice - c.x) + std::abs(d.y.twice - c.y));
            if (!best || cost < best->cost) best = GridOptimum{c, cost};
        }
    }
    return best;
}

// List-of-intervals reference for the segment tree, in coordinate terms.
class NaiveCoverage {
public:
    explicit NaiveCoverage(std::vector<Coord> endpoints) : values_(std::move(endpoints)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }

    void insert(Coord b, Coord e, bool closed = false) { active_.push_back({b, e, closed}); }

    void remove(Coord b, Coord e, bool closed = false) {
        for (auto it = active_.begin(); it != active_.end(); ++it) {
            if (it->b == b && it->e == e && it->closed == closed) {
                active_.erase(it);
                return;
            }
        }
    }

    // Coverage of point v (gap == false) or of the open gap starting at v.
    int coverage_point(Coord v) const {
        int c = 0;
        for (const auto& iv : active_)
            if ((iv.b < v && v < iv.e) || (iv.closed && (v == iv.b || v == iv.e))) ++c;
        return c;
    }
    int coverage_gap(Coord lo, Coord hi) const {
        int c = 0;
        for (const auto& iv : active_)
            if (iv.b <= lo && hi <= iv.e) ++c;
        return c;
    }

    // Per-leaf coverage in the point/gap order of the decomposition.
    std::vector<int> coverage_map() const {
        std::vector<int> out;
        for (std::size_t j = 0; j < values_.size(); ++j) {
            out.push_back(coverage_point(values_[j]));
            if (j + 1 < values_.size()) out.push_back(coverage_gap(values_[j], values_[j + 1]));
        }
        return out;
    }

    struct Piece {
        Coord lo, hi;
        bool lo_closed, hi_closed;
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    // Uncovered parts of [b, e], merged.
    std::vector<Piece> uncovered_within(Coord b, Coord e) const {
        std::vector<Piece> out;
        for (std::size_t j = 0; j < values_.size(); ++j) {
            const Coord v = values_[j];
            if (v < b || v > e) continue;
            if (coverage_point(v) == 0) add(out, {v, v, true, true});
            if (j + 1 < values_.size() && values_[j + 1] <= e && coverage_gap(v, values_[j + 1]) == 0)
                add(out, {v, values_[j + 1], false, false});
        }
        return out;
    }

private:
    struct Active {
        Coord b, e;
        bool closed;
    };
    std::vector<Coord> values_;
    std::vector<Active> active_;

    static void add(std::vector<Piece>& out, Piece p) {
        if (!out.empty() && out.back().hi == p.lo && (out.back().hi_closed || p.lo_closed)) {
            out.back().hi = p.hi;
            out.back().hi_closed = p.hi_closed;
        } else {
            out.push_back(p);
        }
    }
};

}  // namespace rcplace::oracle

#endif  // RCPLACE_ORACLES_HPP
