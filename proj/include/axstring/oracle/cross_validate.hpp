#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "axstring/coefficients.hpp"
#include "axstring/oracle/characteristics.hpp"
#include "axstring/oracle/frozen_fd.hpp"
#include "axstring/series.hpp"

namespace axstring::oracle {

enum class OracleMethod { characteristics, fd, both };

struct CrossValidationOptions {
    OracleMethod method = OracleMethod::both;
    int samples = 200;
    std::uint64_t seed = 0;
    int nx = 1024;
    double cfl = 0.5;
    std::optional<double> horizon;  ///< defaults to T_v
};

struct CrossValidationReport {
    int samples = 0;
    std::uint64_t seed = 0;
    double horizon = 0.0;
    std::optional<double> max_series_vs_characteristics;
    std::optional<double> max_series_vs_fd;
    std::optional<double> max_characteristics_vs_fd;
};

/// Seeded uniform points of the slab {(x, t): t in [0, horizon], x in [vt, L + vt]}.
inline std::vector<std::pair<double, double>> slab_points(const DerivedConstants& c, double horizon, int count,
                                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        const double t = horizon * unit(rng);
        const double x = c.speed * t + c.length * unit(rng);
        pts.emplace_back(x, t);
    }
    return pts;
}

inline CrossValidationReport cross_validate(const SpectralSolution& sol, const CrossValidationOptions& opt = {}) {
    const auto& c = sol.constants;
    const auto& data = sol.config.initial;
    CrossValidationReport r;
    r.samples = opt.samples;
    r.seed = opt.seed;
    r.horizon = opt.horizon.value_or(c.period);
    const auto pts = slab_points(c, r.horizon, opt.samples, opt.seed);

    std::vector<double> series;
    series.reserve(pts.size());
    for (auto [x, t] : pts) series.push_back(eval_field(sol, x, t).phi);

    std::vector<double> chars;
    if (opt.method != OracleMethod::fd) {
        const CharacteristicSolver cs(data, c);
        double m = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            chars.push_back(cs.value(pts[i].first, pts[i].second));
            m = std::max(m, std::abs(series[i] - chars.back()));
        }
        r.max_series_vs_characteristics = m;
    }
    if (opt.method != OracleMethod::characteristics) {
        const auto fd = fd_sample(data, c, opt.nx, opt.cfl, pts);
        double m = 0.0, mc = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            m = std::max(m, std::abs(series[i] - fd[i]));
            if (!chars.empty()) mc = std::max(mc, std::abs(chars[i] - fd[i]));
        }
        r.max_series_vs_fd = m;
        if (!chars.empty()) r.max_characteristics_vs_fd = mc;
    }
    return r;
}

}  // namespace axstring::oracle
