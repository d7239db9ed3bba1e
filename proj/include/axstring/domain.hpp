#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>

#include "axstring/errors.hpp"
#include "axstring/initial_data.hpp"

namespace axstring {

/// Composite-rule density. The rule itself is always composite Simpson.
struct QuadratureSpec {
    int panels_per_unit = 256;
};

/// A string of initial length L translating with speed v (wave speed 1),
/// pinned at x = vt and x = L + vt.
struct StringConfig {
    double length = 0.0;
    double speed = 0.0;
    InitialData initial = InitialData::zero(1.0);
    int n_max = 40;
    QuadratureSpec quadrature{};
};

/// Constants that only depend on (L, v).
struct DerivedConstants {
    double length;
    double speed;
    double gamma;           ///< (1+v)/(1-v), reflection scale factor
    double l1;              ///< L (1-v)/(1+v), left extension length
    double l2;              ///< 2L/(1-v), right end of the extension interval
    double period;          ///< T_v = 2L/(1-v^2), one-endpoint observation time and period
    double two_sided_time;  ///< L/(1-v), two-endpoint observation time
};

/// Moving support observed by a boundary sensor: x = vt or x = L + vt.
enum class Endpoint { left, right };

inline std::string_view to_string(Endpoint e) { return e == Endpoint::left ? "left" : "right"; }

/// Moving spatial domain (vt, L + vt).
struct Interval {
    double left;
    double right;
};

inline void check_well_posed(double length, double speed) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        std::ostringstream os;
        os << "length L = " << length << " must be positive and finite";
        throw DomainError(os.str());
    }
    if (!(speed >= 0.0 && speed < 1.0)) {
        std::ostringstream os;
        os << "speed v = " << speed
           << " is outside 0 <= v < 1: the moving-boundary problem is ill-posed when the "
              "supports travel at or above the wave speed";
        throw DomainError(os.str());
    }
}

inline DerivedConstants derive_constants(double length, double speed) {
    check_well_posed(length, speed);
    const double v = speed;
    return DerivedConstants{
        .length = length,
        .speed = v,
        .gamma = (1.0 + v) / (1.0 - v),
        .l1 = length * (1.0 - v) / (1.0 + v),
        .l2 = 2.0 * length / (1.0 - v),
        .period = 2.0 * length / (1.0 - v * v),
        .two_sided_time = length / (1.0 - v),
    };
}

inline void validate(const StringConfig& cfg) {
    check_well_posed(cfg.length, cfg.speed);
    if (cfg.n_max < 1) throw DomainError("n_max must be >= 1");
    if (cfg.quadrature.panels_per_unit < 8) throw DomainError("panels_per_unit must be >= 8");
    if (std::abs(cfg.initial.length() - cfg.length) > 1e-12 * cfg.length)
        throw DomainError("initial data length does not match L");
}

inline DerivedConstants derive_constants(const StringConfig& cfg) {
    validate(cfg);
    return derive_constants(cfg.length, cfg.speed);
}

inline Interval moving_interval(const DerivedConstants& c, double t) {
    if (!(t >= 0.0)) throw DomainError("moving_interval: t must be >= 0");
    const double left = c.speed * t;
    return {left, left + c.length};
}

inline Interval moving_interval(const StringConfig& cfg, double t) {
    return moving_interval(derive_constants(cfg), t);
}

}  // namespace axstring
