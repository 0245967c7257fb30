#ifndef RCPLACE_GEOMETRY_HPP
#define RCPLACE_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rcplace {

// All internal geometry lives in "doubled" space: every external coordinate
// is multiplied by two so that half a module dimension is still an integer.
using Coord = std::int64_t;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

// Axis-parallel rectangle given by its lower left corner and extent.
// Width and height may be zero internally.
struct Rect {
    Coord x = 0;
    Coord y = 0;
    Coord w = 0;
    Coord h = 0;

    constexpr Coord left() const { return x; }
    constexpr Coord right() const { return x + w; }
    constexpr Coord bottom() const { return y; }
    constexpr Coord top() const { return y + h; }
    constexpr bool empty_interior() const { return w <= 0 || h <= 0; }

    constexpr bool contains_closed(Point p) const {
        return x <= p.x && p.x <= right() && y <= p.y && p.y <= top();
    }
    constexpr bool contains_interior(Point p) const {
        return x < p.x && p.x < right() && y < p.y && p.y < top();
    }
    constexpr bool contains(const Rect& o) const {
        return x <= o.x && o.right() <= right() && y <= o.y && o.top() <= top();
    }

    friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Rect& r) {
    return os << '[' << r.left() << ',' << r.right() << "]x[" << r.bottom() << ',' << r.top() << ']';
}

constexpr bool interiors_overlap(const Rect& a, const Rect& b) {
    return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

// A length or coordinate that may be a multiple of one half, stored as twice
// its value. Used on the external side of the API (module centers, costs).
struct Half {
    std::int64_t twice = 0;

    static constexpr Half units(std::int64_t v) { return Half{2 * v}; }
    static constexpr Half from_twice(std::int64_t t) { return Half{t}; }

    constexpr bool is_integral() const { return twice % 2 == 0; }
    constexpr double value() const { return static_cast<double>(twice) / 2.0; }

    std::string str() const {
        std::string s = std::to_string(twice / 2);
        if (twice % 2 != 0) {
            if (twice < 0 && twice / 2 == 0) s = "-0";
            s += ".5";
        }
        return s;
    }

    friend constexpr auto operator<=>(const Half&, const Half&) = default;
    friend constexpr Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
    friend constexpr Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }
};

inline std::ostream& operator<<(std::ostream& os, const Half& h) { return os << h.str(); }

// Error hierarchy. Each failure mode named by the library has its own type so
// callers (and the CLI) can tell them apart.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInput : Error {
    using Error::Error;
};
struct EmptyShrunkChip : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UnknownEndpoint : Error {
    using Error::Error;
};
struct NoDemand : Error {
    using Error::Error;
};
struct GridTooLarge : Error {
    using Error::Error;
};

}  // namespace rcplace

#endif  // RCPLACE_GEOMETRY_HPP
