#ifndef RCPLACE_CORE_MODEL_HPP
#define RCPLACE_CORE_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "segment_tree.hpp"

namespace rcplace {

// Chip F = (0, 0, W, H) in external units.
struct ChipConfig {
    std::int64_t width = 0;
    std::int64_t height = 0;

    friend constexpr bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

// A module already on the chip. Positions may be half-integral because the
// placer is free to put a center anywhere on the half-unit lattice.
struct PlacedModule {
    Half x;
    Half y;
    std::int64_t w = 0;
    std::int64_t h = 0;

    static PlacedModule at_units(std::int64_t x, std::int64_t y, std::int64_t w, std::int64_t h) {
        return PlacedModule{Half::units(x), Half::units(y), w, h};
    }
    Half center_x() const { return Half{x.twice + w}; }
    Half center_y() const { return Half{y.twice + h}; }
    // Footprint in doubled space.
    Rect doubled() const { return Rect{x.twice, y.twice, 2 * w, 2 * h}; }

    friend constexpr bool operator==(const PlacedModule&, const PlacedModule&) = default;
};

struct DemandPoint {
    Half x;
    Half y;
    std::int64_t buswidth = 0;

    friend constexpr bool operator==(const DemandPoint&, const DemandPoint&) = default;
};

struct PlacementRequest {
    std::int64_t w = 0;
    std::int64_t h = 0;
    std::vector<DemandPoint> demands;
};

// Demand in doubled space, as consumed by the placer.
struct Demand {
    Point at;
    std::int64_t weight = 0;
};

// Sides of an expanded module that were cut back onto the shrunk chip
// boundary. On a clipped side the module still blocks the boundary line.
enum ClipSide : std::uint8_t {
    clip_none = 0,
    clip_left = 1,
    clip_right = 2,
    clip_bottom = 4,
    clip_top = 8,
};

struct ExpandedModule {
    Rect box;               // clipped to the shrunk chip, doubled space
    std::uint8_t clipped = clip_none;
    std::size_t source = 0;  // index into the original module list

    // The region whose interior is infeasible for the new module's center:
    // clipped sides are pushed one doubled unit past the shrunk chip.
    Rect blocking() const {
        Rect r = box;
        if (clipped & clip_left) {
            r.x -= 1;
            r.w += 1;
        }
        if (clipped & clip_right) r.w += 1;
        if (clipped & clip_bottom) {
            r.y -= 1;
            r.h += 1;
        }
        if (clipped & clip_top) r.h += 1;
        return r;
    }
};

// Result of the expand-and-shrink transform: placing the new module becomes
// placing its center point inside `shrunk_chip` but outside every expanded
// module interior. Everything is in doubled space.
struct ExpandedScene {
    Rect shrunk_chip;
    std::vector<ExpandedModule> modules;
    std::size_t original_count = 0;
};

enum class PlacementStatus { placed, rejected };

struct PlacementResult {
    PlacementStatus status = PlacementStatus::rejected;
    Half x;     // center, valid iff placed
    Half y;
    Half cost;  // weighted Manhattan cost in external units, valid iff placed
    std::size_t candidates = 0;

    bool placed() const { return status == PlacementStatus::placed; }
    Point center_doubled() const { return Point{x.twice, y.twice}; }

    static PlacementResult rejected(std::size_t candidates = 0) {
        PlacementResult r;
        r.candidates = candidates;
        return r;
    }
};

// Lower-left corner of a module of size w x h centered at `center` (doubled).
inline PlacedModule module_at_center(Point center, std::int64_t w, std::int64_t h) {
    return PlacedModule{Half{center.x - w}, Half{center.y - h}, w, h};
}

namespace detail {

inline void check_chip(const ChipConfig& chip) {
    if (chip.width <= 0 || chip.height <= 0) throw InvalidInput("chip dimensions must be positive");
}

inline void check_request_dims(const ChipConfig& chip, std::int64_t w, std::int64_t h) {
    if (w <= 0 || h <= 0) throw InvalidInput("requested module dimensions must be positive");
    if (w > chip.width || h > chip.height)
        throw EmptyShrunkChip("requested module " + std::to_string(w) + "x" + std::to_string(h) +
                              " does not fit a " + std::to_string(chip.width) + "x" +
                              std::to_string(chip.height) + " chip");
}

// Rejects modules outside the chip and pairs with overlapping interiors.
// Plane sweep over x with a coverage tree over y: O(n log n).
inline void check_modules(const ChipConfig& chip, std::span<const PlacedModule> modules) {
    const Rect frame{0, 0, 2 * chip.width, 2 * chip.height};
    std::vector<Coord> ys;
    ys.reserve(2 * modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        const PlacedModule& m = modules[i];
        if (m.w <= 0 || m.h <= 0)
            throw InvalidInput("module " + std::to_string(i) + " has non-positive dimensions");
        const Rect r = m.doubled();
        if (!frame.contains(r)) throw InvalidInput("module " + std::to_string(i) + " lies outside the chip");
        ys.push_back(r.bottom());
        ys.push_back(r.top());
    }
    if (modules.size() < 2) return;

    struct Event {
        Coord x;
        int kind;  // 0 = close, 1 = open
        std::size_t index;
    };
    std::vector<Event> events;
    events.reserve(2 * modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        const Rect r = modules[i].doubled();
        events.push_back({r.left(), 1, i});
        events.push_back({r.right(), 0, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    });

    SegmentTree tree(std::move(ys));
    for (const Event& ev : events) {
        const Rect r = modules[ev.index].doubled();
        if (ev.kind == 0) {
            tree.remove(r.bottom(), r.top());
            continue;
        }
        const std::size_t first = tree.index_of(r.bottom()) + 1;
        const std::size_t last = tree.index_of(r.top()) - 1;
        const auto free = tree.uncovered_leaves(first, last);
        if (free.size() != 1 || free.front() != LeafRun{first, last})
            throw InvalidInput("module " + std::to_string(ev.index) + " overlaps another module");
        tree.insert(r.bottom(), r.top());
    }
}

}  // namespace detail

// Validates the request's demand points and converts them to doubled space.
inline std::vector<Demand> to_internal_demands(const ChipConfig& chip, std::span<const DemandPoint> demands) {
    std::vector<Demand> out;
    out.reserve(demands.size());
    for (const DemandPoint& d : demands) {
        if (d.buswidth < 0) throw InvalidInput("negative buswidth");
        if (d.x.twice < 0 || d.x.twice > 2 * chip.width || d.y.twice < 0 || d.y.twice > 2 * chip.height)
            throw InvalidInput("demand point (" + d.x.str() + "," + d.y.str() + ") lies outside the chip");
        out.push_back(Demand{Point{d.x.twice, d.y.twice}, d.buswidth});
    }
    return out;
}

// Expand-and-shrink transform. The shrunk chip is
// [w_m/2, W - w_m/2] x [h_m/2, H - h_m/2]; every module grows by w_m/2
// horizontally and h_m/2 vertically and is intersected with it. Modules whose
// open expansion misses the shrunk chip cannot constrain the center and are
// dropped.
inline ExpandedScene to_internal(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                 std::int64_t request_w, std::int64_t request_h) {
    detail::check_chip(chip);
    detail::check_request_dims(chip, request_w, request_h);
    detail::check_modules(chip, modules);

    ExpandedScene scene;
    scene.original_count = modules.size();
    // Half of w_m in doubled space is w_m itself.
    const Coord hx = request_w;
    const Coord hy = request_h;
    const Coord fx0 = hx, fx1 = 2 * chip.width - hx;
    const Coord fy0 = hy, fy1 = 2 * chip.height - hy;
    scene.shrunk_chip = Rect{fx0, fy0, fx1 - fx0, fy1 - fy0};

    scene.modules.reserve(modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        const Rect r = modules[i].doubled();
        const Coord x0 = r.left() - hx, x1 = r.right() + hx;
        const Coord y0 = r.bottom() - hy, y1 = r.top() + hy;
        if (!(x0 < fx1 && x1 > fx0 && y0 < fy1 && y1 > fy0)) continue;
        ExpandedModule em;
        em.source = i;
        const Coord cx0 = std::max(x0, fx0), cx1 = std::min(x1, fx1);
        const Coord cy0 = std::max(y0, fy0), cy1 = std::min(y1, fy1);
        if (x0 < fx0) em.clipped |= clip_left;
        if (x1 > fx1) em.clipped |= clip_right;
        if (y0 < fy0) em.clipped |= clip_bottom;
        if (y1 > fy1) em.clipped |= clip_top;
        em.box = Rect{cx0, cy0, cx1 - cx0, cy1 - cy0};
        scene.modules.push_back(em);
    }
    return scene;
}

inline ExpandedScene to_internal(const ChipConfig& chip, std::span<const PlacedModule> modules,
                                 const PlacementRequest& request) {
    return to_internal(chip, modules, request.w, request.h);
}

// Two rectangles cross when one is strictly wider and the other strictly
// taller, forming a plus sign.
constexpr bool rects_cross(const Rect& a, const Rect& b) {
    auto crosses = [](const Rect& p, const Rect& q) {
        return p.left() < q.left() && q.right() < p.right() && q.bottom() < p.bottom() && p.top() < q.top();
    };
    return crosses(a, b) || crosses(b, a);
}

}  // namespace rcplace

#endif  // RCPLACE_CORE_MODEL_HPP
