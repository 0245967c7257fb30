#ifndef RCPLACE_FREE_SPACE_HPP
#define RCPLACE_FREE_SPACE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "core_model.hpp"
#include "geometry.hpp"
#include "segment_tree.hpp"

namespace rcplace {

// Axis-parallel contour segment, `from <= to`. May collapse to a point.
struct Segment {
    Point from;
    Point to;

    bool vertical() const { return from.x == to.x; }
    bool degenerate() const { return from == to; }
    friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

// Boundary of the free space of an expanded scene. The free space is closed:
// it contains its boundary, including width-0 corridors between expanded
// modules that touch, which show up here as segments with no free side.
struct Contour {
    std::vector<Segment> vertical;    // sorted by (x, y)
    std::vector<Segment> horizontal;  // sorted by (y, x)

    std::size_t size() const { return vertical.size() + horizontal.size(); }
    bool empty() const { return vertical.empty() && horizontal.empty(); }
};

// Axis directions in which the free space continues from a contour vertex.
enum Direction : std::uint8_t {
    dir_none = 0,
    dir_pos_x = 1,
    dir_neg_x = 2,
    dir_pos_y = 4,
    dir_neg_y = 8,
};

struct ContourVertex {
    Point at;
    std::uint8_t free_directions = dir_none;
};

// True iff p lies in the shrunk chip and not in the interior of any
// expanded module. O(n).
inline bool is_feasible(const ExpandedScene& scene, Point p) {
    if (!scene.shrunk_chip.contains_closed(p)) return false;
    for (const ExpandedModule& m : scene.modules)
        if (m.blocking().contains_interior(p)) return false;
    return true;
}

namespace detail {

enum class EventKind : std::uint8_t { close = 0, open = 1 };

// Event of a sweep along axis "a" with intervals on the perpendicular axis "b".
struct SweepEvent {
    Coord p;
    EventKind kind;
    Coord b;
    Coord e;

    friend constexpr auto operator<=>(const SweepEvent&, const SweepEvent&) = default;
};

// Rectangle projected onto sweep axis a and perpendicular axis b.
struct SweepBox {
    Coord a0, a1, b0, b1;
};

// One segment on the sweep line p spanning [lo, hi] on the perpendicular axis.
struct LineSegment {
    Coord p, lo, hi;
};

inline std::vector<LeafRun> intersect_runs(const std::vector<LeafRun>& u, const std::vector<LeafRun>& v) {
    std::vector<LeafRun> out;
    std::size_t i = 0, j = 0;
    while (i < u.size() && j < v.size()) {
        const std::size_t lo = std::max(u[i].first, v[j].first);
        const std::size_t hi = std::min(u[i].last, v[j].last);
        if (lo <= hi) out.push_back({lo, hi});
        if (u[i].last < v[j].last)
            ++i;
        else
            ++j;
    }
    return out;
}

// u minus v; both sorted and disjoint.
inline std::vector<LeafRun> subtract_runs(const std::vector<LeafRun>& u, const std::vector<LeafRun>& v) {
    std::vector<LeafRun> out;
    std::size_t j = 0;
    for (LeafRun run : u) {
        std::size_t cur = run.first;
        while (j < v.size() && v[j].last < cur) ++j;
        std::size_t k = j;
        while (k < v.size() && v[k].first <= run.last) {
            if (v[k].first > cur) out.push_back({cur, v[k].first - 1});
            cur = std::max(cur, v[k].last + 1);
            ++k;
        }
        if (cur <= run.last) out.push_back({cur, run.last});
    }
    return out;
}

// Boundary pieces lying on the sweep line p. With `before`, `at` and `after`
// the uncovered leaves just before p, on p and just after p, a gap leaf is on
// the contour when it is free on the line but blocked on at least one side; a
// point leaf additionally when it closes off such a gap. Points free on the
// line but blocked on a side are kept even if isolated: that is free space of
// width and height 0.
inline void emit_line(const SegmentTree& tree, Coord p, const std::vector<LeafRun>& before,
                      const std::vector<LeafRun>& at, const std::vector<LeafRun>& after,
                      std::vector<LineSegment>& out) {
    std::vector<LeafRun> runs = subtract_runs(at, intersect_runs(before, after));
    for (LeafRun& r : runs) {
        if (!SegmentTree::is_point_leaf(r.first)) --r.first;
        if (!SegmentTree::is_point_leaf(r.last)) ++r.last;
    }
    std::vector<LeafRun> merged;
    for (const LeafRun& r : runs) {
        if (!merged.empty() && r.first <= merged.back().last + 1)
            merged.back().last = std::max(merged.back().last, r.last);
        else
            merged.push_back(r);
    }
    for (const LeafRun& r : merged) out.push_back({p, tree.leaf_lo(r.first), tree.leaf_lo(r.last)});
}

// One plane sweep along axis a over the frame [a_lo, a_hi] x [b_lo, b_hi].
// Reports every contour segment lying on a line perpendicular to a.
inline std::vector<LineSegment> sweep(const std::vector<SweepBox>& boxes, Coord a_lo, Coord a_hi, Coord b_lo,
                                      Coord b_hi) {
    std::vector<Coord> endpoints;
    endpoints.reserve(2 * boxes.size() + 2);
    endpoints.push_back(b_lo);
    endpoints.push_back(b_hi);
    std::vector<SweepEvent> events;
    events.reserve(2 * boxes.size());
    for (const SweepBox& box : boxes) {
        endpoints.push_back(box.b0);
        endpoints.push_back(box.b1);
        events.push_back({box.a0, EventKind::open, box.b0, box.b1});
        events.push_back({box.a1, EventKind::close, box.b0, box.b1});
    }
    // Lexicographic with Close < Open.
    std::sort(events.begin(), events.end());

    SegmentTree tree(std::move(endpoints));
    const std::size_t frame_first = tree.index_of(b_lo);
    const std::size_t frame_last = tree.index_of(b_hi);

    std::vector<LineSegment> out;
    std::vector<LeafRun> spans;
    std::vector<LeafRun> before, at, after, part;

    auto query = [&](std::vector<LeafRun>& into) {
        into.clear();
        for (const LeafRun& s : spans) {
            part = tree.uncovered_leaves(s.first, s.last);
            into.insert(into.end(), part.begin(), part.end());
        }
    };

    // Sweep lines: every event coordinate plus both frame borders.
    std::vector<Coord> lines;
    lines.reserve(events.size() + 2);
    for (const SweepEvent& ev : events) lines.push_back(ev.p);
    lines.push_back(a_lo);
    lines.push_back(a_hi);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::size_t i = 0;
    for (const Coord p : lines) {
        std::size_t j = i;
        while (j < events.size() && events[j].p == p) ++j;
        std::size_t first_open = i;
        while (first_open < j && events[first_open].kind == EventKind::close) ++first_open;

        const bool inside = a_lo <= p && p <= a_hi;
        if (!inside) {
            for (std::size_t k = i; k < first_open; ++k) tree.remove(events[k].b, events[k].e);
            for (std::size_t k = first_open; k < j; ++k) tree.insert(events[k].b, events[k].e);
            i = j;
            continue;
        }
        const bool at_lo = p == a_lo;
        const bool at_hi = p == a_hi;

        spans.clear();
        if (at_lo || at_hi) {
            spans.push_back({frame_first, frame_last});
        } else {
            for (std::size_t k = i; k < j; ++k) {
                const Coord lo = std::max(events[k].b, b_lo);
                const Coord hi = std::min(events[k].e, b_hi);
                if (lo > hi) continue;
                spans.push_back({tree.index_of(lo), tree.index_of(hi)});
            }
            std::sort(spans.begin(), spans.end(),
                      [](const LeafRun& x, const LeafRun& y) { return x.first < y.first; });
            std::size_t w = 0;
            for (std::size_t k = 0; k < spans.size(); ++k) {
                if (w > 0 && spans[k].first <= spans[w - 1].last)
                    spans[w - 1].last = std::max(spans[w - 1].last, spans[k].last);
                else
                    spans[w++] = spans[k];
            }
            spans.resize(w);
        }

        if (at_lo)
            before.clear();
        else
            query(before);
        for (std::size_t k = i; k < first_open; ++k) tree.remove(events[k].b, events[k].e);
        query(at);
        for (std::size_t k = first_open; k < j; ++k) tree.insert(events[k].b, events[k].e);
        if (at_hi)
            after.clear();
        else
            query(after);

        emit_line(tree, p, before, at, after, out);
        i = j;
    }
    return out;
}

// Sorted lookup of segments by their fixed coordinate.
inline bool covers_point(const std::vector<LineSegment>& segs, Coord p, Coord q, bool nondegenerate_only) {
    auto it = std::upper_bound(segs.begin(), segs.end(), std::pair{p, q}, [](const auto& key, const LineSegment& s) {
        return key.first < s.p || (key.first == s.p && key.second < s.lo);
    });
    if (it == segs.begin()) return false;
    --it;
    if (it->p != p || it->hi < q) return false;
    return !nondegenerate_only || it->lo != it->hi;
}

}  // namespace detail

// Contour of the free space: a horizontal sweep yields the vertical
// segments and a vertical sweep the horizontal ones. Segments are maximal.
// A point of free space with no extent in either direction is reported once,
// as a degenerate vertical segment. Empty iff no feasible point exists.
inline Contour find_contour_segments(const ExpandedScene& scene) {
    const Rect& f = scene.shrunk_chip;
    std::vector<detail::SweepBox> by_x, by_y;
    by_x.reserve(scene.modules.size());
    by_y.reserve(scene.modules.size());
    for (const ExpandedModule& m : scene.modules) {
        const Rect r = m.blocking();
        if (r.empty_interior()) continue;
        by_x.push_back({r.left(), r.right(), r.bottom(), r.top()});
        by_y.push_back({r.bottom(), r.top(), r.left(), r.right()});
    }

    auto vert = detail::sweep(by_x, f.left(), f.right(), f.bottom(), f.top());
    auto horz = detail::sweep(by_y, f.bottom(), f.top(), f.left(), f.right());

    auto order = [](const detail::LineSegment& a, const detail::LineSegment& b) {
        return a.p < b.p || (a.p == b.p && a.lo < b.lo);
    };
    std::sort(vert.begin(), vert.end(), order);
    std::sort(horz.begin(), horz.end(), order);

    Contour c;
    c.vertical.reserve(vert.size());
    c.horizontal.reserve(horz.size());
    for (const auto& s : vert) {
        if (s.lo == s.hi && detail::covers_point(horz, s.lo, s.p, true)) continue;
        c.vertical.push_back(Segment{Point{s.p, s.lo}, Point{s.p, s.hi}});
    }
    for (const auto& s : horz) {
        if (s.lo == s.hi && detail::covers_point(vert, s.lo, s.p, false)) continue;
        c.horizontal.push_back(Segment{Point{s.lo, s.p}, Point{s.hi, s.p}});
    }
    return c;
}

// Directions from p along which points arbitrarily close to p stay feasible.
inline std::uint8_t free_directions(const ExpandedScene& scene, Point p) {
    const Rect& f = scene.shrunk_chip;
    if (!is_feasible(scene, p)) return dir_none;
    bool px = p.x < f.right(), nx = p.x > f.left(), py = p.y < f.top(), ny = p.y > f.bottom();
    for (const ExpandedModule& m : scene.modules) {
        const Rect r = m.blocking();
        const bool in_y = r.bottom() < p.y && p.y < r.top();
        const bool in_x = r.left() < p.x && p.x < r.right();
        if (in_y && r.left() <= p.x && p.x < r.right()) px = false;
        if (in_y && r.left() < p.x && p.x <= r.right()) nx = false;
        if (in_x && r.bottom() <= p.y && p.y < r.top()) py = false;
        if (in_x && r.bottom() < p.y && p.y <= r.top()) ny = false;
    }
    std::uint8_t d = dir_none;
    if (px) d |= dir_pos_x;
    if (nx) d |= dir_neg_x;
    if (py) d |= dir_pos_y;
    if (ny) d |= dir_neg_y;
    return d;
}

// Points where contour segments meet or end, deduplicated and sorted.
inline std::vector<Point> contour_vertex_points(const Contour& contour) {
    std::vector<Point> pts;
    pts.reserve(2 * contour.size());
    for (const Segment& s : contour.vertical) {
        pts.push_back(s.from);
        pts.push_back(s.to);
    }
    for (const Segment& s : contour.horizontal) {
        pts.push_back(s.from);
        pts.push_back(s.to);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Contour vertices annotated with their free directions. The annotation
// costs O(n) per vertex; the placer only needs contour_vertex_points.
inline std::vector<ContourVertex> contour_vertices(const ExpandedScene& scene, const Contour& contour) {
    std::vector<ContourVertex> out;
    for (Point p : contour_vertex_points(contour)) out.push_back(ContourVertex{p, free_directions(scene, p)});
    return out;
}

// True iff p lies on one of the contour's segments. O(log s).
inline bool on_contour(const Contour& contour, Point p) {
    auto vit = std::upper_bound(contour.vertical.begin(), contour.vertical.end(), p,
                                [](Point q, const Segment& s) { return q.x < s.from.x || (q.x == s.from.x && q.y < s.from.y); });
    if (vit != contour.vertical.begin()) {
        const Segment& s = *std::prev(vit);
        if (s.from.x == p.x && s.to.y >= p.y) return true;
    }
    auto hit = std::upper_bound(contour.horizontal.begin(), contour.horizontal.end(), p,
                                [](Point q, const Segment& s) { return q.y < s.from.y || (q.y == s.from.y && q.x < s.from.x); });
    if (hit != contour.horizontal.begin()) {
        const Segment& s = *std::prev(hit);
        if (s.from.y == p.y && s.to.x >= p.x) return true;
    }
    return false;
}

}  // namespace rcplace

#endif  // RCPLACE_FREE_SPACE_HPP
