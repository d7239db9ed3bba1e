#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include "axstring/domain.hpp"
#include "axstring/errors.hpp"
#include "axstring/initial_data.hpp"

namespace axstring {

enum class ExtensionBranch { left, middle, right };
enum class FieldKind { slope, velocity };

/// Initial slope phi0_x or velocity phi1 extended from [0, L] to [-L1, L2]
/// by the scaled reflections that keep both boundary conditions satisfied.
///
/// Branches are the half-open intervals [-L1, 0), [0, L], (L, L2]:
///   left:   x -> -gamma x,               slope factor  gamma,   velocity factor -gamma
///   right:  x -> 2L/(1+v) - x/gamma,     slope factor 1/gamma,  velocity factor -1/gamma
/// The field is generally discontinuous at 0 and L, so integrals must be
/// split there; branch_value() gives the one-sided values needed for that.
class ExtensionField {
public:
    ExtensionField(const InitialData& data, const DerivedConstants& c, FieldKind kind)
        : data_(&data), c_(c), kind_(kind) {}

    FieldKind kind() const { return kind_; }

    std::array<double, 4> breakpoints() const { return {-c_.l1, 0.0, c_.length, c_.l2}; }

    ExtensionBranch branch_of(double x) const {
        check_range(x);
        if (x < 0.0) return ExtensionBranch::left;
        if (x <= c_.length) return ExtensionBranch::middle;
        return ExtensionBranch::right;
    }

    double operator()(double x) const { return branch_value(branch_of(x), x); }

    /// Evaluate the formula of `branch` at x (x may sit on the branch's closed ends).
    double branch_value(ExtensionBranch branch, double x) const {
        const double arg = source_point(branch, x);
        const double raw = kind_ == FieldKind::slope ? data_->phi0_x(arg) : data_->phi1(arg);
        return factor(branch) * raw;
    }

    /// Point of [0, L] whose datum feeds branch `branch` at x.
    double source_point(ExtensionBranch branch, double x) const {
        double s = x;
        switch (branch) {
            case ExtensionBranch::left: s = -c_.gamma * x; break;
            case ExtensionBranch::middle: break;
            case ExtensionBranch::right:
                s = 2.0 * c_.length / (1.0 + c_.speed) - x / c_.gamma;
                break;
        }
        return std::clamp(s, 0.0, c_.length);
    }

    double factor(ExtensionBranch branch) const {
        const double sign = kind_ == FieldKind::slope ? 1.0 : -1.0;
        switch (branch) {
            case ExtensionBranch::left: return sign * c_.gamma;
            case ExtensionBranch::middle: return 1.0;
            case ExtensionBranch::right: return sign / c_.gamma;
        }
        return 1.0;
    }

    /// Images in `branch` of the data's interior breakpoints, sorted.
    std::vector<double> mapped_breakpoints(ExtensionBranch branch) const {
        std::vector<double> out;
        for (double k : data_->breakpoints()) {
            switch (branch) {
                case ExtensionBranch::left: out.push_back(-k / c_.gamma); break;
                case ExtensionBranch::middle: out.push_back(k); break;
                case ExtensionBranch::right:
                    out.push_back(c_.gamma * (2.0 * c_.length / (1.0 + c_.speed) - k));
                    break;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void check_range(double x) const {
        const double slack = 1e-12 * c_.l2;
        if (x < -c_.l1 - slack || x > c_.l2 + slack) {
            std::ostringstream os;
            os.precision(17);
            os << "extension: x = " << x << " outside [-L1, L2] = [" << -c_.l1 << ", " << c_.l2 << "]";
            throw DomainError(os.str());
        }
    }

    const InitialData* data_;
    DerivedConstants c_;
    FieldKind kind_;
};

inline double extend_slope(const InitialData& data, const DerivedConstants& c, double x) {
    return ExtensionField(data, c, FieldKind::slope)(x);
}

inline double extend_velocity(const InitialData& data, const DerivedConstants& c, double x) {
    return ExtensionField(data, c, FieldKind::velocity)(x);
}

}  // namespace axstring
