#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "axstring/coefficients.hpp"
#include "axstring/domain.hpp"
#include "axstring/energy.hpp"
#include "axstring/oracle/characteristics.hpp"
#include "axstring/quadrature.hpp"
#include "axstring/series.hpp"

namespace axstring {

enum class ObservationMode { left, right, both };

inline std::string_view to_string(ObservationMode m) {
    switch (m) {
        case ObservationMode::left: return "left";
        case ObservationMode::right: return "right";
        case ObservationMode::both: return "both";
    }
    return "left";
}

/// Boundary observation of phi_x^2 (or the velocity equivalent) against calE(0).
struct ObservabilityReport {
    ObservationMode mode = ObservationMode::left;
    double horizon = 0.0;                  ///< T, or M T_v in period mode
    std::optional<int> periods;            ///< M, one-endpoint period mode only
    double integral = 0.0;                 ///< the observation functional
    double left_integral = 0.0;
    double right_integral = 0.0;
    double energy0 = 0.0;                  ///< calE(0) of the truncated series
    std::optional<double> identity_rhs;    ///< closed-form value of the integral when one exists
    std::optional<double> identity_residual;
    bool inverse_constant_check = false;   ///< calE(0) <= (1 - v^2)^2 / 4 * integral within tol
    bool inverse_check_required = false;   ///< horizon reaches the observability time
    double direct_constant = 0.0;          ///< integral / calE(0)
    double direct_bound = 0.0;             ///< K1 or K2 = 4M/(1 - v^2)^2 (twice that for both ends)
    bool direct_bound_check = false;       ///< integral <= direct_bound * calE(0) within tol
    std::optional<double> velocity_ratio;  ///< int phi_t^2 / int phi_x^2 (velocity variant)
    bool vacuous = false;                  ///< zero data

    /// Inequality checks only; the identity residual is judged by the caller's tolerance.
    bool passed() const { return direct_bound_check && (!inverse_check_required || inverse_constant_check); }
};

namespace detail {

inline double endpoint_position(const DerivedConstants& c, Endpoint e, double t) {
    return (e == Endpoint::left ? 0.0 : c.length) + c.speed * t;
}

/// Time panel density resolving trace^2, whose top angular frequency is 4 pi n_max / T_v.
inline int trace_panels_per_unit(const SpectralSolution& sol) {
    const double k_max = 4.0 * std::numbers::pi * sol.coefficients.n_max() / sol.constants.period;
    return std::max(sol.config.quadrature.panels_per_unit, static_cast<int>(std::ceil(5.0 * k_max)));
}

inline double trace_integral(const SpectralSolution& sol, Endpoint e, double horizon) {
    if (!(horizon > 0.0)) return 0.0;
    return integrate(
        [&](double t) {
            const double y = boundary_slope(sol, e, t);
            return y * y;
        },
        0.0, horizon, trace_panels_per_unit(sol));
}

inline double direct_constant_for(const DerivedConstants& c, double horizon) {
    const double w = 1.0 - c.speed * c.speed;
    const int m = std::max(1, static_cast<int>(std::ceil(horizon / c.period - 1e-12)));
    return 4.0 * m / (w * w);
}

inline void finish(ObservabilityReport& r, const DerivedConstants& c, double tol) {
    const double w = 1.0 - c.speed * c.speed;
    r.vacuous = !(r.energy0 > 0.0);
    r.direct_constant = r.vacuous ? 0.0 : r.integral / r.energy0;
    if (r.identity_rhs) {
        const double rhs = *r.identity_rhs;
        r.identity_residual = rhs > 0.0 ? std::abs(r.integral - rhs) / rhs : std::abs(r.integral - rhs);
    }
    r.inverse_constant_check = r.vacuous || r.energy0 <= 0.25 * w * w * r.integral * (1.0 + tol);
    r.direct_bound_check = r.integral <= r.direct_bound * r.energy0 * (1.0 + tol) || r.vacuous;
}

}  // namespace detail

/// int_0^{M T_v} phi_x^2(x_b + vt, t) dt, which equals 4M calE(0)/(1 - v^2)^2.
inline ObservabilityReport observe_one_endpoint(const SpectralSolution& sol, Endpoint e, int periods,
                                                double tol = 1e-6) {
    if (periods < 1) throw DomainError("observe_one_endpoint: M must be >= 1");
    const auto& c = sol.constants;
    const double w = 1.0 - c.speed * c.speed;
    ObservabilityReport r;
    r.mode = e == Endpoint::left ? ObservationMode::left : ObservationMode::right;
    r.periods = periods;
    r.horizon = periods * c.period;
    r.integral = detail::trace_integral(sol, e, r.horizon);
    (e == Endpoint::left ? r.left_integral : r.right_integral) = r.integral;
    r.energy0 = energy_at(sol, 0.0).cal_e;
    r.identity_rhs = 4.0 * periods * r.energy0 / (w * w);
    r.inverse_check_required = true;
    r.direct_bound = detail::direct_constant_for(c, r.horizon);
    detail::finish(r, c, tol);
    return r;
}

/// int_0^{L/(1+v)} phi_x^2(vt, t) dt + int_0^{L/(1-v)} phi_x^2(L + vt, t) dt = 4 calE(0)/(1 - v^2)^2.
inline ObservabilityReport observe_both_endpoints(const SpectralSolution& sol, double tol = 1e-6) {
    const auto& c = sol.constants;
    const double w = 1.0 - c.speed * c.speed;
    ObservabilityReport r;
    r.mode = ObservationMode::both;
    r.horizon = c.two_sided_time;
    r.left_integral = detail::trace_integral(sol, Endpoint::left, c.length / (1.0 + c.speed));
    r.right_integral = detail::trace_integral(sol, Endpoint::right, c.length / (1.0 - c.speed));
    r.integral = r.left_integral + r.right_integral;
    r.energy0 = energy_at(sol, 0.0).cal_e;
    r.identity_rhs = 4.0 * r.energy0 / (w * w);
    r.inverse_check_required = true;
    r.direct_bound = 2.0 * detail::direct_constant_for(c, r.horizon);
    detail::finish(r, c, tol);
    return r;
}

/// Observation over an arbitrary horizon [0, T]. No identity applies; the
/// direct bound uses M = ceil(T / T_v) and the inverse inequality is
/// required once T reaches T_v (one end) or L/(1-v) (both ends).
inline ObservabilityReport observe_horizon(const SpectralSolution& sol, ObservationMode mode, double horizon,
                                           double tol = 1e-6) {
    if (!(horizon > 0.0)) throw DomainError("observe_horizon: T must be > 0");
    const auto& c = sol.constants;
    ObservabilityReport r;
    r.mode = mode;
    r.horizon = horizon;
    if (mode != ObservationMode::right) r.left_integral = detail::trace_integral(sol, Endpoint::left, horizon);
    if (mode != ObservationMode::left) r.right_integral = detail::trace_integral(sol, Endpoint::right, horizon);
    r.integral = r.left_integral + r.right_integral;
    r.energy0 = energy_at(sol, 0.0).cal_e;
    const double threshold = mode == ObservationMode::both ? c.two_sided_time : c.period;
    r.inverse_check_required = horizon >= threshold * (1.0 - 1e-12);
    r.direct_bound = (mode == ObservationMode::both ? 2.0 : 1.0) * detail::direct_constant_for(c, horizon);
    detail::finish(r, c, tol);
    return r;
}

/// Same identity with phi_x replaced by phi_t / v at the moving endpoint
/// (phi_t = -v phi_x there). Both traces come from the field evaluator;
/// `velocity_ratio` = int phi_t^2 / int phi_x^2 must equal v^2.
inline ObservabilityReport velocity_trace_equivalent(const SpectralSolution& sol, Endpoint e, int periods,
                                                     double tol = 1e-6) {
    const auto& c = sol.constants;
    if (!(c.speed > 0.0)) throw DomainError("velocity_trace_equivalent: requires v > 0");
    if (periods < 1) throw DomainError("velocity_trace_equivalent: M must be >= 1");
    const double w = 1.0 - c.speed * c.speed;
    ObservabilityReport r;
    r.mode = e == Endpoint::left ? ObservationMode::left : ObservationMode::right;
    r.periods = periods;
    r.horizon = periods * c.period;
    Panelization p{0.0, r.horizon, {}, detail::trace_panels_per_unit(sol)};
    double int_t = 0.0, int_x = 0.0;
    for (const auto& seg : p.segments()) {
        for (const auto& node : simpson_nodes(seg)) {
            const auto s = eval_field(sol, detail::endpoint_position(c, e, node.x), node.x);
            int_t += node.weight * s.phi_t * s.phi_t;
            int_x += node.weight * s.phi_x * s.phi_x;
        }
    }
    r.integral = int_t / (c.speed * c.speed);
    (e == Endpoint::left ? r.left_integral : r.right_integral) = r.integral;
    r.energy0 = energy_at(sol, 0.0).cal_e;
    r.identity_rhs = 4.0 * periods * r.energy0 / (w * w);
    r.inverse_check_required = true;
    r.direct_bound = detail::direct_constant_for(c, r.horizon);
    if (int_x > 0.0) r.velocity_ratio = int_t / int_x;
    detail::finish(r, c, tol);
    return r;
}

struct SharpnessOptions {
    double width = 0.0;                 ///< bump support width; defaults to L/64
    std::optional<double> center;       ///< defaults to width/2 (support (0, width))
    VelocityMode velocity = VelocityMode::zero;
    int panels_per_unit = 256;
};

struct SharpnessReport {
    double horizon = 0.0;
    double width = 0.0;
    double center = 0.0;
    VelocityMode velocity = VelocityMode::zero;
    double left_integral = 0.0;
    double right_integral = 0.0;
    double energy0 = 0.0;            ///< calE(0) of the bump, normalised to 1
    double ratio = 0.0;              ///< (left + right) / calE(0)
    double left_only_ratio = 0.0;    ///< left / calE(0)
    double right_arrival = 0.0;      ///< earliest time the right trace can be non-zero
};

/// Probe T < L/(1-v): a narrow unit-energy bump near x = 0 does not reach the
/// right support before T. Traces come from the characteristic solver, which
/// propagates with exact finite speed (a truncated series would leak).
/// Integral of phi_x^2 along one support over [0, horizon] for the exact
/// (untruncated) solution, panels split at every trace kink.
inline double exact_trace_integral(const oracle::CharacteristicSolver& cs, Endpoint e, double horizon,
                                   int panels_per_unit = 256) {
    if (!(horizon > 0.0)) throw DomainError("exact_trace_integral: horizon must be positive");
    const DerivedConstants& c = cs.constants();
    // The trace jumps at the breakpoints: segment end nodes are evaluated a
    // hair inside their segment so each side sees its own one-sided limit.
    double acc = 0.0;
    for (const auto& seg : Panelization{0.0, horizon, cs.trace_breakpoints(e, horizon), panels_per_unit}.segments()) {
        const double inset = 1e-13 * (seg.b - seg.a);
        acc += integrate_segment(
            [&](double t) {
                const double s = std::clamp(t, seg.a + inset, seg.b - inset);
                const double y = cs.slope(detail::endpoint_position(c, e, s), s);
                return y * y;
            },
            seg);
    }
    return acc;
}

inline SharpnessReport sharpness_probe(double length, double speed, double horizon, SharpnessOptions opt = {}) {
    const DerivedConstants c = derive_constants(length, speed);
    if (!(horizon > 0.0 && horizon < c.two_sided_time))
        throw DomainError("sharpness_probe: requires 0 < T < L/(1-v)");
    if (!(opt.width > 0.0)) opt.width = length / 64.0;
    const double center = opt.center.value_or(0.5 * opt.width);
    const QuadratureSpec q{std::max(opt.panels_per_unit, static_cast<int>(std::ceil(64.0 / opt.width)))};

    InitialData bump = InitialData::bump(length, center, opt.width, 1.0, opt.velocity);
    const double e_raw = initial_energies(bump, c, q).cal_e;
    bump = bump.scaled(1.0 / std::sqrt(e_raw));

    const oracle::CharacteristicSolver cs(bump, c);
    auto integral = [&](Endpoint e) { return exact_trace_integral(cs, e, horizon, q.panels_per_unit); };

    SharpnessReport r;
    r.horizon = horizon;
    r.width = opt.width;
    r.center = center;
    r.velocity = opt.velocity;
    r.energy0 = initial_energies(bump, c, q).cal_e;
    r.left_integral = integral(Endpoint::left);
    r.right_integral = integral(Endpoint::right);
    r.ratio = (r.left_integral + r.right_integral) / r.energy0;
    r.left_only_ratio = r.left_integral / r.energy0;
    r.right_arrival = (length - (center + 0.5 * opt.width)) / (1.0 - speed);
    return r;
}

}  // namespace axstring
