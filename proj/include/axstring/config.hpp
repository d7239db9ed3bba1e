#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axstring/domain.hpp"
#include "axstring/errors.hpp"
#include "axstring/initial_data.hpp"

namespace axstring {

/// Parse a tabulated initial-data CSV: header `x,phi0,phi1`, x strictly increasing.
inline InitialData read_table_csv(std::istream& in, const std::string& origin) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << origin << ":" << lineno << ": " << what;
        throw ConfigError(os.str());
    };
    if (!std::getline(in, line)) fail("empty table");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,phi0,phi1") fail("header must be exactly 'x,phi0,phi1'");

    std::vector<double> x, p0, p1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double vals[3];
        int k = 0;
        while (std::getline(row, cell, ',')) {
            if (k == 3) fail("expected 3 columns");
            try {
                std::size_t used = 0;
                vals[k] = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                fail("cannot parse number '" + cell + "'");
            }
            ++k;
        }
        if (k != 3) fail("expected 3 columns");
        if (!x.empty() && !(vals[0] > x.back())) fail("x must be strictly increasing");
        x.push_back(vals[0]);
        p0.push_back(vals[1]);
        p1.push_back(vals[2]);
    }
    try {
        return InitialData::tabulated(x, p0, p1);
    } catch (const DomainError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

namespace detail {

using nlohmann::json;

[[noreturn]] inline void key_error(const std::string& origin, const std::string& key, const std::string& what) {
    throw ConfigError(origin + ": key '" + key + "': " + what);
}

inline double number_at(const json& j, const std::string& name, const std::string& path,
                        const std::string& origin) {
    if (!j.contains(name)) key_error(origin, path + name, "missing");
    if (!j.at(name).is_number()) key_error(origin, path + name, "must be a number");
    return j.at(name).get<double>();
}

inline double number_or(const json& j, const std::string& name, double fallback, const std::string& path,
                        const std::string& origin) {
    return j.contains(name) ? number_at(j, name, path, origin) : fallback;
}

inline int integer_at(const json& j, const std::string& name, const std::string& path, const std::string& origin) {
    if (!j.contains(name)) key_error(origin, path + name, "missing");
    if (!j.at(name).is_number_integer()) key_error(origin, path + name, "must be an integer");
    return j.at(name).get<int>();
}

inline VelocityMode velocity_mode(const json& params, const std::string& path, const std::string& origin) {
    if (!params.contains("velocity")) return VelocityMode::zero;
    const auto& v = params.at("velocity");
    if (!v.is_string()) key_error(origin, path + "velocity", "must be a string");
    const auto s = v.get<std::string>();
    if (s == "zero") return VelocityMode::zero;
    if (s == "plus_slope") return VelocityMode::plus_slope;
    if (s == "minus_slope") return VelocityMode::minus_slope;
    key_error(origin, path + "velocity", "expected zero|plus_slope|minus_slope, got '" + s + "'");
}

inline InitialData preset(const json& p, double length, const std::string& origin) {
    if (!p.is_object()) key_error(origin, "initial.preset", "must be an object");
    if (!p.contains("name") || !p.at("name").is_string())
        key_error(origin, "initial.preset.name", "missing or not a string");
    const auto name = p.at("name").get<std::string>();
    const json params = p.value("params", json::object());
    if (!params.is_object()) key_error(origin, "initial.preset.params", "must be an object");
    const std::string path = "initial.preset.params.";
    try {
        if (name == "zero") return InitialData::zero(length);
        if (name == "sine_mode")
            return InitialData::sine_mode(length, number_or(params, "amplitude", 0.1, path, origin),
                                          params.contains("mode") ? integer_at(params, "mode", path, origin) : 1,
                                          velocity_mode(params, path, origin));
        if (name == "sine_velocity")
            return InitialData::sine_velocity(length, number_or(params, "amplitude", 0.1, path, origin),
                                              params.contains("mode") ? integer_at(params, "mode", path, origin)
                                                                      : 1);
        if (name == "bump") {
            const double width = number_or(params, "width", length / 8.0, path, origin);
            return InitialData::bump(length, number_or(params, "center", 0.5 * length, path, origin), width,
                                     number_or(params, "amplitude", 0.1, path, origin),
                                     velocity_mode(params, path, origin));
        }
    } catch (const DomainError& e) {
        key_error(origin, "initial.preset", e.what());
    }
    key_error(origin, "initial.preset.name", "unknown preset '" + name + "' (zero|sine_mode|sine_velocity|bump)");
}

}  // namespace detail

/// Parse a JSON configuration document. `base_dir` resolves relative table
/// paths. Syntax errors report the line; semantic errors name the key.
inline StringConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {},
                                 const std::string& origin = "<config>") {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t end = std::min(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
        std::ostringstream os;
        os << origin << ":" << line << ": JSON syntax error: " << e.what();
        throw ConfigError(os.str());
    }
    if (!j.is_object()) throw ConfigError(origin + ": top level must be a JSON object");

    StringConfig cfg;
    cfg.length = detail::number_at(j, "L", "", origin);
    cfg.speed = detail::number_at(j, "v", "", origin);
    if (j.contains("n_max")) cfg.n_max = detail::integer_at(j, "n_max", "", origin);
    if (j.contains("quadrature")) {
        const auto& q = j.at("quadrature");
        if (!q.is_object()) detail::key_error(origin, "quadrature", "must be an object");
        if (q.contains("panels_per_unit"))
            cfg.quadrature.panels_per_unit = detail::integer_at(q, "panels_per_unit", "quadrature.", origin);
    }
    try {
        check_well_posed(cfg.length, cfg.speed);
    } catch (const DomainError& e) {
        detail::key_error(origin, cfg.length > 0.0 && std::isfinite(cfg.length) ? "v" : "L", e.what());
    }

    if (!j.contains("initial")) detail::key_error(origin, "initial", "missing");
    const auto& init = j.at("initial");
    if (!init.is_object()) detail::key_error(origin, "initial", "must be an object");
    if (init.contains("preset") == init.contains("table"))
        detail::key_error(origin, "initial", "exactly one of 'preset' or 'table' is required");
    if (init.contains("preset")) {
        cfg.initial = detail::preset(init.at("preset"), cfg.length, origin);
    } else {
        if (!init.at("table").is_string()) detail::key_error(origin, "initial.table", "must be a path string");
        std::filesystem::path p = init.at("table").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        std::ifstream in(p);
        if (!in) detail::key_error(origin, "initial.table", "cannot open '" + p.string() + "'");
        cfg.initial = read_table_csv(in, p.string());
        if (std::abs(cfg.initial.length() - cfg.length) > 1e-12 * cfg.length)
            detail::key_error(origin, "initial.table", "last x sample must equal L");
    }
    try {
        validate(cfg);
    } catch (const DomainError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

inline StringConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_config(text, path.parent_path(), path.string());
}

}  // namespace axstring
