#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "axstring/coefficients.hpp"
#include "axstring/domain.hpp"
#include "axstring/quadrature.hpp"
#include "axstring/series.hpp"

namespace axstring {

/// The conserved functional calE = 1/2 int (phi_t + v phi_x)^2 + (1 - v^2) phi_x^2,
/// the usual energy E = 1/2 int phi_t^2 + phi_x^2 and the cross term
/// int phi_x phi_t, all over the moving interval at one time.
struct EnergySample {
    double t = 0.0;
    double cal_e = 0.0;
    double e = 0.0;
    double cross = 0.0;
};

namespace detail {

struct EnergyDensity {
    double cal_e, e, cross;
};

inline EnergyDensity energy_density(double v, double px, double pt) {
    const double material = pt + v * px;
    return {0.5 * (material * material + (1.0 - v * v) * px * px), 0.5 * (pt * pt + px * px), px * pt};
}

template <class Slopes>
EnergySample integrate_energy(double v, double t, const Panelization& p, Slopes&& slopes) {
    EnergySample out{t, 0.0, 0.0, 0.0};
    for (const auto& seg : p.segments()) {
        for (const auto& node : simpson_nodes(seg)) {
            auto [px, pt] = slopes(node.x);
            const auto d = energy_density(v, px, pt);
            if (!std::isfinite(d.cal_e) || !std::isfinite(d.e)) throw_non_finite(node.x);
            out.cal_e += node.weight * d.cal_e;
            out.e += node.weight * d.e;
            out.cross += node.weight * d.cross;
        }
    }
    return out;
}

}  // namespace detail

/// Energies of the truncated series at time t, by quadrature over (vt, L + vt).
inline EnergySample energy_at(const SpectralSolution& sol, double t) {
    const auto& c = sol.constants;
    const Interval I = moving_interval(c, t);
    return detail::integrate_energy(c.speed, t, Panelization{I.left, I.right, {}, resolved_panels_per_unit(sol)},
                                    [&](double x) {
                                        const auto s = eval_field(sol, x, t);
                                        return std::pair{s.phi_x, s.phi_t};
                                    });
}

/// Energies at t = 0 computed directly from the initial data.
inline EnergySample initial_energies(const InitialData& data, const DerivedConstants& c,
                                     const QuadratureSpec& q = {}) {
    return detail::integrate_energy(c.speed, 0.0,
                                    Panelization{0.0, c.length, data.breakpoints(), q.panels_per_unit},
                                    [&](double x) { return std::pair{data.phi0_x(x), data.phi1(x)}; });
}

/// 2 pi^2 (1 - v^2)/L * sum |n c_n|^2: the time-independent value of calE.
inline double spectral_energy(const SpectralSolution& sol) {
    const auto& c = sol.constants;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return 2.0 * pi2 * (1.0 - c.speed * c.speed) / c.length * weighted_square_sum(sol.coefficients);
}

/// Centered difference of calE(t) with step h; zero up to quadrature noise.
inline double energy_rate(const SpectralSolution& sol, double t, double h) {
    if (t < h) return (energy_at(sol, t + h).cal_e - energy_at(sol, t).cal_e) / h;
    return (energy_at(sol, t + h).cal_e - energy_at(sol, t - h).cal_e) / (2.0 * h);
}

struct EnergyReport {
    std::vector<double> times;
    std::vector<double> cal_e;
    std::vector<double> e;
    std::vector<double> cross;
    double spectral = 0.0;
    double e_initial = 0.0;               ///< E(0)
    double residual_conservation = 0.0;   ///< max_t |calE(t) - spectral| / spectral
    double residual_cross_identity = 0.0; ///< max_t |E + v int phi_x phi_t - calE| / calE
    int bound_violations = 0;             ///< failures of the calE/(1 +- v) or gamma sandwich
    bool vacuous = false;                 ///< zero data: relative checks are meaningless

    double residual_at(std::size_t i) const {
        return vacuous ? std::abs(cal_e[i] - spectral) : std::abs(cal_e[i] - spectral) / spectral;
    }
};

/// Full energy sweep with the two-sided bounds
///   calE/(1+v) <= E <= calE/(1-v)   and   E(0)/gamma <= E(t) <= gamma E(0)
/// checked at every time with relative slack `tol`.
inline EnergyReport energy_report(const SpectralSolution& sol, std::vector<double> times, double tol = 1e-6) {
    if (times.empty()) throw DomainError("energy_report: times must be non-empty");
    for (double t : times)
        if (!(t >= 0.0)) throw DomainError("energy_report: times must be >= 0");
    std::sort(times.begin(), times.end());

    const auto& c = sol.constants;
    const double v = c.speed;
    EnergyReport r;
    r.spectral = spectral_energy(sol);
    r.e_initial = energy_at(sol, 0.0).e;
    r.vacuous = !(r.spectral > 0.0);
    r.times = std::move(times);
    for (double t : r.times) {
        const auto s = energy_at(sol, t);
        r.cal_e.push_back(s.cal_e);
        r.e.push_back(s.e);
        r.cross.push_back(s.cross);
    }
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        const double cal = r.cal_e[i];
        const double e = r.e[i];
        const double scale = r.vacuous ? 1.0 : cal;
        r.residual_conservation = std::max(r.residual_conservation, r.residual_at(i));
        r.residual_cross_identity =
            std::max(r.residual_cross_identity, std::abs(e + v * r.cross[i] - cal) / scale);
        const double abs_slack = tol * std::max(cal, e);
        const bool sandwich = cal / (1.0 + v) <= e + abs_slack && e <= cal / (1.0 - v) + abs_slack;
        const bool stab = r.e_initial / c.gamma <= e + abs_slack && e <= c.gamma * r.e_initial + abs_slack;
        if (!sandwich || !stab) ++r.bound_violations;
    }
    return r;
}

/// n uniformly spaced times covering [0, t_end] inclusive.
inline std::vector<double> uniform_times(double t_end, int n) {
    std::vector<double> out;
    if (n <= 1) return {0.0};
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(t_end * i / (n - 1));
    return out;
}

}  // namespace axstring
