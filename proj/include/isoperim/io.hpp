#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoperim/geometry.hpp"
#include "isoperim/hardy_sobolev.hpp"
#include "isoperim/report.hpp"

namespace isoperim {

namespace detail {

inline double json_number(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number()) throw Error("domain file: " + what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw Error("domain file: " + what + " must be finite");
    return v;
}

inline Vec2 json_point(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw Error("domain file: " + what + " must be [x,y]");
    return Vec2{json_number(j[0], what), json_number(j[1], what)};
}

} // namespace detail

inline Domain parse_domain(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error("domain file: expected an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "disk") {
        return Domain::disk(detail::json_point(j.at("center"), "center"),
                            detail::json_number(j.at("radius"), "radius"));
    }
    if (kind == "fourier_star") {
        std::vector<double> cos_c, sin_c;
        if (j.contains("cos"))
            for (const auto& c : j.at("cos")) cos_c.push_back(detail::json_number(c, "cos"));
        if (j.contains("sin"))
            for (const auto& s : j.at("sin")) sin_c.push_back(detail::json_number(s, "sin"));
        return Domain::fourier_star(detail::json_point(j.at("center"), "center"),
                                    detail::json_number(j.at("a0"), "a0"), std::move(cos_c),
                                    std::move(sin_c));
    }
    if (kind == "polygon") {
        std::vector<Vec2> vertices;
        for (const auto& v : j.at("vertices")) vertices.push_back(detail::json_point(v, "vertex"));
        return Domain::polygon(std::move(vertices));
    }
    if (kind == "union") {
        std::vector<Domain> parts;
        for (const auto& part : j.at("parts")) parts.push_back(parse_domain(part));
        return Domain::union_of(std::move(parts));
    }
    throw Error("domain file: unknown kind \"" + kind + "\"");
}

inline Domain load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open domain file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("domain file " + path + ": " + e.what());
    }
    return parse_domain(j);
}

inline TestFunction parse_test_function(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("profile"))
        throw Error("test function file: expected {\"base\":..., \"profile\":...}");
    Domain base = parse_domain(j.at("base"));
    std::vector<TestFunction::Breakpoint> breakpoints;
    for (const auto& bp : j.at("profile").at("breakpoints")) {
        if (!bp.is_array() || bp.size() != 2)
            throw Error("test function file: breakpoints must be [s, value] pairs");
        breakpoints.push_back(TestFunction::Breakpoint{
            detail::json_number(bp[0], "breakpoint s"), detail::json_number(bp[1], "breakpoint value")});
    }
    return TestFunction(std::move(base), std::move(breakpoints));
}

inline TestFunction load_test_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open test function file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("test function file " + path + ": " + e.what());
    }
    return parse_test_function(j);
}

// Domain serialization in the documented file format.
inline JsonValue domain_json(const Domain& d) {
    return d.visit([](const auto& g) -> JsonValue {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return JsonValue::object({
                {"kind", JsonValue::string("disk")},
                {"center", JsonValue::array({JsonValue::number(g.center.x),
                                             JsonValue::number(g.center.y)})},
                {"radius", JsonValue::number(g.radius)},
            });
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            return JsonValue::object({
                {"kind", JsonValue::string("fourier_star")},
                {"center", JsonValue::array({JsonValue::number(g.center.x),
                                             JsonValue::number(g.center.y)})},
                {"a0", JsonValue::number(g.a0)},
                {"cos", JsonValue::number_array(g.cos_coef)},
                {"sin", JsonValue::number_array(g.sin_coef)},
            });
        } else if constexpr (std::is_same_v<T, Polygon>) {
            std::vector<JsonValue> verts;
            verts.reserve(g.vertices.size());
            for (const Vec2& v : g.vertices)
                verts.push_back(
                    JsonValue::array({JsonValue::number(v.x), JsonValue::number(v.y)}));
            return JsonValue::object({
                {"kind", JsonValue::string("polygon")},
                {"vertices", JsonValue::array(std::move(verts))},
            });
        } else {
            std::vector<JsonValue> parts;
            parts.reserve(g.parts.size());
            for (const Domain& part : g.parts) parts.push_back(domain_json(part));
            return JsonValue::object({
                {"kind", JsonValue::string("union")},
                {"parts", JsonValue::array(std::move(parts))},
            });
        }
    });
}

} // namespace isoperim
