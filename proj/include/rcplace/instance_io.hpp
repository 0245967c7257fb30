#ifndef RCPLACE_INSTANCE_IO_HPP
#define RCPLACE_INSTANCE_IO_HPP

// Instance documents (JSON):
//
//   {
//     "chip": {"width": W, "height": H},
//     "modules": [
//       {"id": "m0", "arrival_index": 0, "x": 5, "y": 5, "w": 3, "h": 3,
//        "lifetime": 10, "border_edge": "left",
//        "buswidths": {"border": 2, "m1": 4}}
//     ],
//     "requests": [
//       {"id": "r0", "w": 4, "h": 2, "border_edge": "bottom",
//        "buswidths": {"m0": 3, "border": 1},
//        "points": [{"x": 1, "y": 2, "buswidth": 5}]}
//     ]
//   }
//
// A module with x and y is on the chip; one without is a pending arrival for
// the simulator. Buswidth keys name another module or "border" (the midpoint
// of the owner's border_edge). All numbers are decimal integers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core_model.hpp"
#include "geometry.hpp"

namespace rcplace {

enum class BorderEdge { left, right, bottom, top };

inline const char* to_string(BorderEdge e) {
    switch (e) {
        case BorderEdge::left: return "left";
        case BorderEdge::right: return "right";
        case BorderEdge::bottom: return "bottom";
        case BorderEdge::top: return "top";
    }
    return "left";
}

inline std::optional<BorderEdge> border_edge_from_string(std::string_view s) {
    if (s == "left") return BorderEdge::left;
    if (s == "right") return BorderEdge::right;
    if (s == "bottom") return BorderEdge::bottom;
    if (s == "top") return BorderEdge::top;
    return std::nullopt;
}

// Midpoint of one chip edge.
inline DemandPoint border_demand(const ChipConfig& chip, BorderEdge edge, std::int64_t buswidth) {
    switch (edge) {
        case BorderEdge::left: return {Half::units(0), Half{chip.height}, buswidth};
        case BorderEdge::right: return {Half::units(chip.width), Half{chip.height}, buswidth};
        case BorderEdge::bottom: return {Half{chip.width}, Half::units(0), buswidth};
        case BorderEdge::top: return {Half{chip.width}, Half::units(chip.height), buswidth};
    }
    return {};
}

inline constexpr std::string_view border_key = "border";

struct ModuleSpec {
    std::string id;
    std::int64_t arrival_index = 0;
    std::optional<std::int64_t> x;
    std::optional<std::int64_t> y;
    std::int64_t w = 0;
    std::int64_t h = 0;
    std::optional<std::int64_t> lifetime;
    std::optional<BorderEdge> border_edge;
    std::map<std::string, std::int64_t> buswidths;

    bool placed() const { return x.has_value(); }
    friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct PointDemandSpec {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t buswidth = 0;
    friend bool operator==(const PointDemandSpec&, const PointDemandSpec&) = default;
};

struct RequestSpec {
    std::string id;
    std::int64_t w = 0;
    std::int64_t h = 0;
    std::optional<BorderEdge> border_edge;
    std::map<std::string, std::int64_t> buswidths;
    std::vector<PointDemandSpec> points;
    friend bool operator==(const RequestSpec&, const RequestSpec&) = default;
};

struct Instance {
    ChipConfig chip;
    std::vector<ModuleSpec> modules;
    std::vector<RequestSpec> requests;
    friend bool operator==(const Instance&, const Instance&) = default;
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline void allow_only(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (auto key : keys) known = known || key == k;
        if (!known) fail(path, "unknown field \"" + k + "\"");
    }
}

inline const json& require(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::int64_t read_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

inline std::int64_t read_positive(const json& v, const std::string& path) {
    const std::int64_t n = read_int(v, path);
    if (n <= 0) fail(path, "must be positive, got " + std::to_string(n));
    return n;
}

inline std::int64_t read_non_negative(const json& v, const std::string& path) {
    const std::int64_t n = read_int(v, path);
    if (n < 0) fail(path, "must not be negative, got " + std::to_string(n));
    return n;
}

inline std::string read_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

inline BorderEdge read_edge(const json& v, const std::string& path) {
    auto e = border_edge_from_string(read_string(v, path));
    if (!e) fail(path, "expected one of left, right, bottom, top");
    return *e;
}

inline std::map<std::string, std::int64_t> read_buswidths(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    std::map<std::string, std::int64_t> out;
    for (const auto& [k, b] : v.items()) out[k] = read_non_negative(b, path + "." + k);
    return out;
}

}  // namespace detail

// Parses and validates an instance document. Errors carry the JSON path of
// the offending field, or the line and column of a syntax error.
inline Instance parse_instance(std::string_view text) {
    using detail::fail;
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    detail::allow_only(doc, "$", {"chip", "modules", "requests"});

    Instance inst;
    const json& chip = detail::require(doc, "$", "chip");
    detail::allow_only(chip, "chip", {"width", "height"});
    inst.chip.width = detail::read_positive(detail::require(chip, "chip", "width"), "chip.width");
    inst.chip.height = detail::read_positive(detail::require(chip, "chip", "height"), "chip.height");

    std::set<std::string> ids;
    if (auto it = doc.find("modules"); it != doc.end()) {
        if (!it->is_array()) fail("modules", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& m = (*it)[i];
            const std::string path = "modules[" + std::to_string(i) + "]";
            detail::allow_only(m, path,
                               {"id", "arrival_index", "x", "y", "w", "h", "lifetime", "border_edge", "buswidths"});
            ModuleSpec spec;
            spec.id = detail::read_string(detail::require(m, path, "id"), path + ".id");
            if (spec.id.empty() || spec.id == border_key) fail(path + ".id", "invalid module id");
            if (!ids.insert(spec.id).second) fail(path + ".id", "duplicate id \"" + spec.id + "\"");
            spec.arrival_index = detail::read_non_negative(detail::require(m, path, "arrival_index"), path + ".arrival_index");
            spec.w = detail::read_positive(detail::require(m, path, "w"), path + ".w");
            spec.h = detail::read_positive(detail::require(m, path, "h"), path + ".h");
            if (m.contains("x") != m.contains("y")) fail(path, "x and y must be given together");
            if (m.contains("x")) {
                spec.x = detail::read_non_negative(m["x"], path + ".x");
                spec.y = detail::read_non_negative(m["y"], path + ".y");
                if (*spec.x + spec.w > inst.chip.width || *spec.y + spec.h > inst.chip.height)
                    fail(path, "module lies outside the chip");
            }
            if (spec.w > inst.chip.width || spec.h > inst.chip.height) fail(path, "module is larger than the chip");
            if (m.contains("lifetime")) spec.lifetime = detail::read_non_negative(m["lifetime"], path + ".lifetime");
            if (m.contains("border_edge")) spec.border_edge = detail::read_edge(m["border_edge"], path + ".border_edge");
            if (m.contains("buswidths")) spec.buswidths = detail::read_buswidths(m["buswidths"], path + ".buswidths");
            inst.modules.push_back(std::move(spec));
        }
    }
    for (std::size_t i = 0; i < inst.modules.size(); ++i) {
        const ModuleSpec& m = inst.modules[i];
        for (const auto& [k, b] : m.buswidths) {
            const std::string path = "modules[" + std::to_string(i) + "].buswidths." + k;
            if (k == border_key) {
                if (!m.border_edge) fail(path, "border demand needs border_edge");
            } else if (!ids.count(k) || k == m.id) {
                fail(path, "unknown module id");
            }
        }
    }

    if (auto it = doc.find("requests"); it != doc.end()) {
        if (!it->is_array()) fail("requests", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& r = (*it)[i];
            const std::string path = "requests[" + std::to_string(i) + "]";
            detail::allow_only(r, path, {"id", "w", "h", "border_edge", "buswidths", "points"});
            RequestSpec spec;
            spec.id = detail::read_string(detail::require(r, path, "id"), path + ".id");
            spec.w = detail::read_positive(detail::require(r, path, "w"), path + ".w");
            spec.h = detail::read_positive(detail::require(r, path, "h"), path + ".h");
            if (r.contains("border_edge")) spec.border_edge = detail::read_edge(r["border_edge"], path + ".border_edge");
            if (r.contains("buswidths")) spec.buswidths = detail::read_buswidths(r["buswidths"], path + ".buswidths");
            for (const auto& [k, b] : spec.buswidths) {
                if (k == border_key) {
                    if (!spec.border_edge) fail(path + ".buswidths.border", "border demand needs border_edge");
                } else if (!ids.count(k)) {
                    fail(path + ".buswidths." + k, "unknown module id");
                }
            }
            if (r.contains("points")) {
                const json& pts = r["points"];
                if (!pts.is_array()) fail(path + ".points", "expected an array");
                for (std::size_t j = 0; j < pts.size(); ++j) {
                    const std::string pp = path + ".points[" + std::to_string(j) + "]";
                    detail::allow_only(pts[j], pp, {"x", "y", "buswidth"});
                    PointDemandSpec d;
                    d.x = detail::read_non_negative(detail::require(pts[j], pp, "x"), pp + ".x");
                    d.y = detail::read_non_negative(detail::require(pts[j], pp, "y"), pp + ".y");
                    d.buswidth = detail::read_non_negative(detail::require(pts[j], pp, "buswidth"), pp + ".buswidth");
                    if (d.x > inst.chip.width || d.y > inst.chip.height) fail(pp, "point lies outside the chip");
                    spec.points.push_back(d);
                }
            }
            inst.requests.push_back(std::move(spec));
        }
    }
    return inst;
}

inline std::string write_instance(const Instance& inst) {
    using detail::json;
    json doc;
    doc["chip"] = json{{"width", inst.chip.width}, {"height", inst.chip.height}};
    json modules = json::array();
    for (const ModuleSpec& m : inst.modules) {
        json j;
        j["id"] = m.id;
        j["arrival_index"] = m.arrival_index;
        if (m.x) {
            j["x"] = *m.x;
            j["y"] = *m.y;
        }
        j["w"] = m.w;
        j["h"] = m.h;
        if (m.lifetime) j["lifetime"] = *m.lifetime;
        if (m.border_edge) j["border_edge"] = to_string(*m.border_edge);
        if (!m.buswidths.empty()) {
            json b = json::object();
            for (const auto& [k, v] : m.buswidths) b[k] = v;
            j["buswidths"] = std::move(b);
        }
        modules.push_back(std::move(j));
    }
    doc["modules"] = std::move(modules);
    json requests = json::array();
    for (const RequestSpec& r : inst.requests) {
        json j;
        j["id"] = r.id;
        j["w"] = r.w;
        j["h"] = r.h;
        if (r.border_edge) j["border_edge"] = to_string(*r.border_edge);
        if (!r.buswidths.empty()) {
            json b = json::object();
            for (const auto& [k, v] : r.buswidths) b[k] = v;
            j["buswidths"] = std::move(b);
        }
        if (!r.points.empty()) {
            json pts = json::array();
            for (const PointDemandSpec& p : r.points) pts.push_back(json{{"x", p.x}, {"y", p.y}, {"buswidth", p.buswidth}});
            j["points"] = std::move(pts);
        }
        requests.push_back(std::move(j));
    }
    doc["requests"] = std::move(requests);
    return doc.dump(2) + "\n";
}

// Modules of the instance that are on the chip, in document order.
inline std::vector<PlacedModule> placed_modules(const Instance& inst) {
    std::vector<PlacedModule> out;
    for (const ModuleSpec& m : inst.modules)
        if (m.placed()) out.push_back(PlacedModule::at_units(*m.x, *m.y, m.w, m.h));
    return out;
}

// Turns a request's symbolic demands into points: module ids resolve to the
// centers of placed modules, "border" to the midpoint of its border edge.
inline PlacementRequest resolve_request(const Instance& inst, const RequestSpec& r) {
    PlacementRequest req;
    req.w = r.w;
    req.h = r.h;
    for (const auto& [k, b] : r.buswidths) {
        if (k == border_key) {
            req.demands.push_back(border_demand(inst.chip, *r.border_edge, b));
            continue;
        }
        auto it = std::find_if(inst.modules.begin(), inst.modules.end(), [&](const ModuleSpec& m) { return m.id == k; });
        if (it == inst.modules.end() || !it->placed())
            throw InvalidInput("request " + r.id + " references module " + k + " which is not on the chip");
        const PlacedModule pm = PlacedModule::at_units(*it->x, *it->y, it->w, it->h);
        req.demands.push_back(DemandPoint{pm.center_x(), pm.center_y(), b});
    }
    for (const PointDemandSpec& p : r.points) req.demands.push_back(DemandPoint{Half::units(p.x), Half::units(p.y), p.buswidth});
    return req;
}

}  // namespace rcplace

#endif  // RCPLACE_INSTANCE_IO_HPP
