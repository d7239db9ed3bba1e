#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "axstring/errors.hpp"
#include "axstring/spline.hpp"

namespace axstring {

/// How a preset's initial velocity relates to its initial shape.
enum class VelocityMode {
    zero,         ///< phi1 = 0
    plus_slope,   ///< phi1 = +phi0_x
    minus_slope,  ///< phi1 = -phi0_x (purely right-moving at v = 0)
};

inline std::string_view to_string(VelocityMode m) {
    switch (m) {
        case VelocityMode::zero: return "zero";
        case VelocityMode::plus_slope: return "plus_slope";
        case VelocityMode::minus_slope: return "minus_slope";
    }
    return "zero";
}

namespace detail {

// Cubic B-spline with knots -2..2, unit integral.
inline double cubic_bspline(double u) {
    const double a = std::abs(u);
    if (a < 1.0) return 2.0 / 3.0 - a * a + 0.5 * a * a * a;
    if (a < 2.0) {
        const double r = 2.0 - a;
        return r * r * r / 6.0;
    }
    return 0.0;
}

inline double cubic_bspline_derivative(double u) {
    const double a = std::abs(u);
    const double s = u < 0.0 ? -1.0 : 1.0;
    if (a < 1.0) return s * (-2.0 * a + 1.5 * a * a);
    if (a < 2.0) {
        const double r = 2.0 - a;
        return -s * 0.5 * r * r;
    }
    return 0.0;
}

inline double apply_velocity(VelocityMode m, double slope) {
    switch (m) {
        case VelocityMode::zero: return 0.0;
        case VelocityMode::plus_slope: return slope;
        case VelocityMode::minus_slope: return -slope;
    }
    return 0.0;
}

}  // namespace detail

/// Initial displacement phi0 and velocity phi1 on [0, L].
///
/// Presets are evaluated in closed form. Tabulated data are interpolated by
/// natural cubic splines and phi0_x is the spline's derivative. All variants
/// satisfy phi0(0) = phi0(L) = 0.
class InitialData {
public:
    struct Zero {};
    struct SineMode {
        double amplitude;
        int mode;
        VelocityMode velocity;
    };
    struct SineVelocity {
        double amplitude;
        int mode;
    };
    struct Bump {
        double center;
        double width;
        double amplitude;
        VelocityMode velocity;
    };
    struct Table {
        NaturalCubicSpline phi0;
        NaturalCubicSpline phi1;
    };
    using Variant = std::variant<Zero, SineMode, SineVelocity, Bump, Table>;

    static InitialData zero(double length) { return InitialData(length, Zero{}); }

    /// phi0 = a sin(k pi x / L), phi1 per `velocity`.
    static InitialData sine_mode(double length, double amplitude, int mode,
                                 VelocityMode velocity = VelocityMode::zero) {
        if (mode < 1) throw DomainError("sine_mode: mode must be a positive integer");
        return InitialData(length, SineMode{amplitude, mode, velocity});
    }

    /// phi0 = 0, phi1 = a sin(k pi x / L).
    static InitialData sine_velocity(double length, double amplitude, int mode) {
        if (mode < 1) throw DomainError("sine_velocity: mode must be a positive integer");
        return InitialData(length, SineVelocity{amplitude, mode});
    }

    /// Cubic B-spline bump a*B((x - c)/(w/4)) supported on [c - w/2, c + w/2].
    static InitialData bump(double length, double center, double width, double amplitude,
                            VelocityMode velocity = VelocityMode::zero) {
        if (!(width > 0.0)) throw DomainError("bump: width must be positive");
        const double lo = center - 0.5 * width;
        const double hi = center + 0.5 * width;
        const double slack = 1e-12 * length;
        if (lo < -slack || hi > length + slack)
            throw DomainError("bump: support [c - w/2, c + w/2] must lie inside [0, L]");
        return InitialData(length, Bump{center, width, amplitude, velocity});
    }

    /// Samples (x_i, phi0_i, phi1_i); x must start at 0, end at L and increase strictly.
    static InitialData tabulated(std::span<const double> x, std::span<const double> phi0,
                                 std::span<const double> phi1) {
        if (x.size() < 3 || phi0.size() != x.size() || phi1.size() != x.size())
            throw DomainError("tabulated data: need >= 3 rows with x, phi0 and phi1 columns");
        if (x.front() != 0.0) throw DomainError("tabulated data: first sample must be at x = 0");
        const double length = x.back();
        double scale = 1.0;
        for (double p : phi0) scale = std::max(scale, std::abs(p));
        if (std::abs(phi0.front()) > 1e-12 * scale || std::abs(phi0.back()) > 1e-12 * scale)
            throw DomainError("tabulated data: phi0 must vanish at x = 0 and x = L");
        return InitialData(length, Table{NaturalCubicSpline(x, phi0), NaturalCubicSpline(x, phi1)});
    }

    double length() const { return length_; }
    const Variant& variant() const { return data_; }
    double scale() const { return scale_; }

    bool is_zero() const {
        if (scale_ == 0.0) return true;
        return std::visit(
            [](const auto& d) -> bool {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, Zero>) return true;
                else if constexpr (std::is_same_v<T, Table>) {
                    auto zero = [](std::span<const double> s) {
                        return std::all_of(s.begin(), s.end(), [](double y) { return y == 0.0; });
                    };
                    return zero(d.phi0.values()) && zero(d.phi1.values());
                } else return d.amplitude == 0.0;
            },
            data_);
    }

    std::string_view kind() const {
        return std::visit(
            [](const auto& d) -> std::string_view {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, Zero>) return "zero";
                else if constexpr (std::is_same_v<T, SineMode>) return "sine_mode";
                else if constexpr (std::is_same_v<T, SineVelocity>) return "sine_velocity";
                else if constexpr (std::is_same_v<T, Bump>) return "bump";
                else return "table";
            },
            data_);
    }

    /// Copy with phi0 and phi1 multiplied by `factor`.
    InitialData scaled(double factor) const {
        InitialData out = *this;
        out.scale_ *= factor;
        return out;
    }

    double phi0(double x) const {
        return scale_ * std::visit([&](const auto& d) { return eval_phi0(d, x); }, data_);
    }
    double phi0_x(double x) const {
        return scale_ * std::visit([&](const auto& d) { return eval_phi0_x(d, x); }, data_);
    }
    double phi1(double x) const {
        return scale_ * std::visit([&](const auto& d) { return eval_phi1(d, x); }, data_);
    }

    /// Interior points of (0, L) where the data may lose smoothness.
    std::vector<double> breakpoints() const {
        std::vector<double> out;
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, Bump>) {
                    for (int j = -2; j <= 2; ++j) out.push_back(d.center + 0.25 * j * d.width);
                } else if constexpr (std::is_same_v<T, Table>) {
                    for (double k : d.phi0.knots()) out.push_back(k);
                }
            },
            data_);
        std::erase_if(out, [&](double b) { return !(b > 0.0 && b < length_); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    InitialData(double length, Variant data) : length_(length), data_(std::move(data)) {
        if (!(length > 0.0) || !std::isfinite(length))
            throw DomainError("initial data: length L must be positive and finite");
    }

    double wave_number(int mode) const { return mode * std::numbers::pi / length_; }

    double eval_phi0(const Zero&, double) const { return 0.0; }
    double eval_phi0(const SineMode& d, double x) const {
        return d.amplitude * std::sin(wave_number(d.mode) * x);
    }
    double eval_phi0(const SineVelocity&, double) const { return 0.0; }
    double eval_phi0(const Bump& d, double x) const {
        return d.amplitude * detail::cubic_bspline((x - d.center) / (0.25 * d.width));
    }
    double eval_phi0(const Table& d, double x) const { return d.phi0(x); }

    double eval_phi0_x(const Zero&, double) const { return 0.0; }
    double eval_phi0_x(const SineMode& d, double x) const {
        const double k = wave_number(d.mode);
        return d.amplitude * k * std::cos(k * x);
    }
    double eval_phi0_x(const SineVelocity&, double) const { return 0.0; }
    double eval_phi0_x(const Bump& d, double x) const {
        const double s = 0.25 * d.width;
        return d.amplitude * detail::cubic_bspline_derivative((x - d.center) / s) / s;
    }
    double eval_phi0_x(const Table& d, double x) const { return d.phi0.derivative(x); }

    double eval_phi1(const Zero&, double) const { return 0.0; }
    double eval_phi1(const SineMode& d, double x) const {
        return detail::apply_velocity(d.velocity, eval_phi0_x(d, x));
    }
    double eval_phi1(const SineVelocity& d, double x) const {
        return d.amplitude * std::sin(wave_number(d.mode) * x);
    }
    double eval_phi1(const Bump& d, double x) const {
        return detail::apply_velocity(d.velocity, eval_phi0_x(d, x));
    }
    double eval_phi1(const Table& d, double x) const { return d.phi1(x); }

    double length_;
    Variant data_;
    double scale_ = 1.0;
};

}  // namespace axstring
