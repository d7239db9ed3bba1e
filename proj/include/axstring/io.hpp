#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "axstring/errors.hpp"

namespace axstring::io {

/// Round-trippable decimal form of a double (17 significant digits).
inline std::string format_number(double x) {
    if (x == 0.0) return std::signbit(x) ? "-0" : "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Writes files under one output directory and remembers every path
/// (relative to that directory, in emission order) for the run manifest.
class OutputDir {
public:
    explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {
        std::filesystem::create_directories(root_);
    }

    const std::filesystem::path& root() const { return root_; }
    const std::vector<std::string>& files() const { return files_; }

    void write_text(const std::string& name, const std::string& content) {
        const auto p = root_ / name;
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw EvaluationError("cannot write '" + p.string() + "'");
        out << content;
        if (!out) throw EvaluationError("write failed for '" + p.string() + "'");
        files_.push_back(name);
    }

private:
    std::filesystem::path root_;
    std::vector<std::string> files_;
};

/// In-memory CSV with fixed numeric formatting.
class CsvBuilder {
public:
    explicit CsvBuilder(std::initializer_list<std::string> header) {
        bool first = true;
        for (const auto& h : header) {
            if (!first) text_ += ',';
            text_ += h;
            first = false;
        }
        text_ += '\n';
        columns_ = header.size();
    }

    void row(std::initializer_list<double> values) {
        if (values.size() != columns_) throw EvaluationError("csv: row width does not match header");
        bool first = true;
        for (double v : values) {
            if (!std::isfinite(v)) throw EvaluationError("csv: non-finite value " + format_number(v));
            if (!first) text_ += ',';
            text_ += format_number(v);
            first = false;
        }
        text_ += '\n';
    }

    /// Integer-led row (e.g. the coefficient index n).
    void row(long long key, std::initializer_list<double> values) {
        if (values.size() + 1 != columns_) throw EvaluationError("csv: row width does not match header");
        text_ += std::to_string(key);
        for (double v : values) {
            if (!std::isfinite(v)) throw EvaluationError("csv: non-finite value " + format_number(v));
            text_ += ',';
            text_ += format_number(v);
        }
        text_ += '\n';
    }

    const std::string& str() const { return text_; }

private:
    std::string text_;
    std::size_t columns_ = 0;
};

}  // namespace axstring::io
