#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "isoperim/conformal.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/greens.hpp"
#include "isoperim/hardy_sobolev.hpp"
#include "isoperim/measures.hpp"
#include "isoperim/search.hpp"

namespace isoperim {

// Floats in reports carry 17 significant digits so that identical inputs
// produce byte-identical files.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Minimal order-preserving JSON value for report emission. Parsing of input
// files lives elsewhere (nlohmann); this writer exists to pin the byte-level
// output format.
class JsonValue {
public:
    static JsonValue number(double v) { return JsonValue(format_double(v)); }
    static JsonValue integer(std::int64_t v) { return JsonValue(std::to_string(v)); }
    static JsonValue boolean(bool v) { return JsonValue(v ? "true" : "false"); }
    static JsonValue string(const std::string& s) { return JsonValue("\"" + escape(s) + "\""); }

    static JsonValue array(std::vector<JsonValue> items) {
        std::string out = "[";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ",";
            out += items[i].text_;
        }
        out += "]";
        return JsonValue(std::move(out));
    }

    static JsonValue number_array(const std::vector<double>& v) {
        std::vector<JsonValue> items;
        items.reserve(v.size());
        for (double x : v) items.push_back(number(x));
        return array(std::move(items));
    }

    static JsonValue object(std::vector<std::pair<std::string, JsonValue>> fields) {
        std::string out = "{";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ",";
            out += "\"" + escape(fields[i].first) + "\":" + fields[i].second.text_;
        }
        out += "}";
        return JsonValue(std::move(out));
    }

    const std::string& dump() const { return text_; }

private:
    explicit JsonValue(std::string text) : text_(std::move(text)) {}

    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default: out += c;
            }
        }
        return out;
    }

    std::string text_;
};

// Write-temp-then-rename so readers never observe a partial report.
inline void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw Error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot rename " + tmp + " to " + path);
}

inline JsonValue to_json(const DeficitReport& rep) {
    return JsonValue::object({
        {"lhs", JsonValue::number(rep.lhs)},
        {"rhs", JsonValue::number(rep.rhs)},
        {"deficit", JsonValue::number(rep.deficit)},
        {"p", JsonValue::number(rep.p)},
        {"hypothesis",
         JsonValue::object({
             {"connected", JsonValue::boolean(rep.hypothesis.connected)},
             {"origin", JsonValue::string(to_string(rep.hypothesis.origin))},
         })},
        {"verdict", JsonValue::string(to_string(rep.verdict))},
        {"quad_order", JsonValue::integer(rep.quad_order)},
    });
}

inline JsonValue to_json(const ProofReplayReport& rep) {
    return JsonValue::object({
        {"p", JsonValue::number(rep.p)},
        {"lambda", JsonValue::array({JsonValue::number(rep.lambda.real()),
                                     JsonValue::number(rep.lambda.imag())})},
        {"tail_energy", JsonValue::number(rep.tail_energy)},
        {"chain", JsonValue::array({JsonValue::number(rep.chain[0]),
                                    JsonValue::number(rep.chain[1]),
                                    JsonValue::number(rep.chain[2])})},
        {"r_grid", JsonValue::number_array(rep.r_values)},
        {"A_r", JsonValue::number_array(rep.a_r)},
        {"S_r", JsonValue::number_array(rep.s_r)},
        {"residual", JsonValue::number(rep.theodorsen_residual)},
    });
}

inline JsonValue to_json(const FlucherBound& bound, double beta, const Vec2& x,
                         GreenFunction::Representation rep) {
    return JsonValue::object({
        {"beta", JsonValue::number(beta)},
        {"lhs", JsonValue::number(bound.lhs)},
        {"rhs", JsonValue::number(bound.rhs)},
        {"x", JsonValue::array({JsonValue::number(x.x), JsonValue::number(x.y)})},
        {"representation",
         JsonValue::string(rep == GreenFunction::Representation::disk ? "disk" : "conformal")},
    });
}

inline JsonValue scan_summary_json(const ScanResult& scan) {
    std::vector<std::pair<std::string, JsonValue>> argmin_fields;
    if (!scan.rows.empty())
        for (std::size_t i = 0; i < scan.param_names.size(); ++i)
            argmin_fields.emplace_back(scan.param_names[i],
                                       JsonValue::number(scan.rows[scan.argmin].params[i]));
    return JsonValue::object({
        {"name", JsonValue::string(scan.name)},
        {"seed", JsonValue::integer(static_cast<std::int64_t>(scan.seed))},
        {"rows", JsonValue::integer(static_cast<std::int64_t>(scan.rows.size()))},
        {"min_deficit", JsonValue::number(scan.min_deficit)},
        {"argmin", JsonValue::object(std::move(argmin_fields))},
        {"crossings", JsonValue::number_array(scan.crossings)},
    });
}

inline std::string scan_csv(const ScanResult& scan) {
    std::ostringstream out;
    for (const std::string& name : scan.param_names) out << name << ",";
    out << "lhs,rhs,deficit,verdict\n";
    for (const ScanRow& row : scan.rows) {
        for (double p : row.params) out << format_double(p) << ",";
        out << format_double(row.lhs) << "," << format_double(row.rhs) << ","
            << format_double(row.deficit) << "," << to_string(row.verdict) << "\n";
    }
    return out.str();
}

inline std::string extremal_csv(double p, const std::vector<ExtremalStep>& steps) {
    std::ostringstream out;
    out << "p,eps,lhs,rhs,ratio\n";
    for (const ExtremalStep& s : steps)
        out << format_double(p) << "," << format_double(s.eps) << "," << format_double(s.lhs)
            << "," << format_double(s.rhs) << "," << format_double(s.ratio) << "\n";
    return out.str();
}

} // namespace isoperim
