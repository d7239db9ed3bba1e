#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "axstring/domain.hpp"
#include "axstring/errors.hpp"
#include "axstring/initial_data.hpp"

namespace axstring::oracle {

/// d'Alembert solution phi(x, t) = F(x + t) + G(x - t) on the moving domain.
///
/// On [0, L]: F = (phi0 + Phi1)/2, G = (phi0 - Phi1)/2 with Phi1 the
/// antiderivative of phi1. The pinned supports give the reflection laws
///   G(-s)        = -F(gamma s)       (left support, s >= 0)
///   F(L + gamma s) = -G(L - s)       (right support, s >= 0)
/// which extend F to [0, inf) and G to (-inf, L]. Independent of the series
/// coefficients.
class CharacteristicSolver {
public:
    static constexpr int kMaxReflections = 64;

    explicit CharacteristicSolver(InitialData data, const DerivedConstants& c, int antiderivative_cells = 4096)
        : data_(std::move(data)), c_(c) {
        if (antiderivative_cells < 2) throw DomainError("characteristics: need >= 2 antiderivative cells");
        build_antiderivative(antiderivative_cells);
    }

    const DerivedConstants& constants() const { return c_; }

    double value(double x, double t) const {
        check_point(x, t);
        return profile(Profile::f, x + t, false) + profile(Profile::g, x - t, false);
    }

    double slope(double x, double t) const {
        check_point(x, t);
        return profile(Profile::f, x + t, true) + profile(Profile::g, x - t, true);
    }

    double rate(double x, double t) const {
        check_point(x, t);
        return profile(Profile::f, x + t, true) - profile(Profile::g, x - t, true);
    }

    /// Left-going profile F(s), s >= 0, and its derivative.
    double f(double s) const { return profile(Profile::f, s, false); }
    double f_prime(double s) const { return profile(Profile::f, s, true); }
    /// Right-going profile G(s), s <= L, and its derivative.
    double g(double s) const { return profile(Profile::g, s, false); }
    double g_prime(double s) const { return profile(Profile::g, s, true); }

    /// Antiderivative of phi1 from 0, cubic Hermite between cumulative Simpson nodes.
    double phi1_antiderivative(double s) const {
        s = std::clamp(s, 0.0, c_.length);
        const double h = c_.length / cells_;
        std::size_t i = static_cast<std::size_t>(s / h);
        if (i >= static_cast<std::size_t>(cells_)) i = static_cast<std::size_t>(cells_) - 1;
        const double u = (s - i * h) / h;
        const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
        const double h10 = u * (1.0 - u) * (1.0 - u);
        const double h01 = u * u * (3.0 - 2.0 * u);
        const double h11 = u * u * (u - 1.0);
        return h00 * big_phi_[i] + h10 * h * rate_[i] + h01 * big_phi_[i + 1] + h11 * h * rate_[i + 1];
    }

    /// Times in [0, horizon] where phi_x(x_b + vt, t) may have a kink: the
    /// arrival times of every profile breakpoint (data knots, 0 and L and
    /// their reflected images).
    std::vector<double> trace_breakpoints(Endpoint e, double horizon) const {
        const double v = c_.speed;
        const double L = c_.length;
        // F-profile kinks in [0, s_max]; G-profile kinks in [g_min, L].
        const double s_max = L + (1.0 + v) * horizon;
        const double g_min = -(1.0 - v) * horizon;
        std::vector<double> base = data_.breakpoints();
        base.push_back(0.0);
        base.push_back(L);
        std::vector<double> fk = base, gk = base;
        for (int pass = 0; pass < kMaxReflections; ++pass) {
            bool grew = false;
            for (double g : std::vector<double>(gk)) {
                const double s = L + c_.gamma * (L - g);
                if (s > L && s <= s_max && !contains(fk, s)) fk.push_back(s), grew = true;
            }
            for (double fv : std::vector<double>(fk)) {
                const double s = -fv / c_.gamma;
                if (s < 0.0 && s >= g_min && !contains(gk, s)) gk.push_back(s), grew = true;
            }
            if (!grew) break;
        }
        std::vector<double> out;
        // phi_x(vt, t) = F'((1+v)t) + G'(-(1-v)t); phi_x(L+vt, t) = F'(L+(1+v)t) + G'(L-(1-v)t).
        const double x_b = e == Endpoint::left ? 0.0 : L;
        for (double s : fk) {
            const double t = (s - x_b) / (1.0 + v);
            if (t > 0.0 && t < horizon) out.push_back(t);
        }
        for (double s : gk) {
            const double t = (x_b - s) / (1.0 - v);
            if (t > 0.0 && t < horizon) out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    enum class Profile { f, g };

    static bool contains(const std::vector<double>& xs, double s) {
        return std::any_of(xs.begin(), xs.end(), [&](double y) { return std::abs(y - s) <= 1e-12 * (1.0 + std::abs(s)); });
    }

    void check_point(double x, double t) const {
        if (!(t >= 0.0)) throw DomainError("characteristics: t must be >= 0");
        const double left = c_.speed * t;
        const double slack = 1e-12 * std::max(1.0, std::abs(x));
        if (x < left - slack || x > left + c_.length + slack) {
            std::ostringstream os;
            os.precision(17);
            os << "characteristics: x = " << x << " outside [" << left << ", " << left + c_.length
               << "] at t = " << t;
            throw DomainError(os.str());
        }
    }

    // Reduce the argument into [0, L] by alternating reflections. Values flip
    // sign at each one; derivatives instead pick up the chain-rule factor
    // (whose -1 cancels the flip).
    double profile(Profile which, double s, bool derivative) const {
        const double L = c_.length;
        double sign = 1.0;
        int depth = 0;
        for (;;) {
            if (which == Profile::f) {
                if (s <= L) break;
                s = L - (s - L) / c_.gamma;
                which = Profile::g;
                if (derivative) sign /= c_.gamma;
            } else {
                if (s >= 0.0) break;
                s = -c_.gamma * s;
                which = Profile::f;
                if (derivative) sign *= c_.gamma;
            }
            if (!derivative) sign = -sign;
            if (++depth > kMaxReflections) {
                std::ostringstream os;
                os << "characteristics: more than " << kMaxReflections << " reflections needed";
                throw EvaluationError(os.str());
            }
        }
        s = std::clamp(s, 0.0, L);
        const double half_sign = which == Profile::f ? 0.5 : -0.5;
        if (derivative) return sign * (0.5 * data_.phi0_x(s) + half_sign * data_.phi1(s));
        return sign * (0.5 * data_.phi0(s) + half_sign * phi1_antiderivative(s));
    }

    void build_antiderivative(int cells) {
        cells_ = cells;
        const double h = c_.length / cells;
        big_phi_.assign(static_cast<std::size_t>(cells) + 1, 0.0);
        rate_.assign(static_cast<std::size_t>(cells) + 1, 0.0);
        for (int i = 0; i <= cells; ++i) rate_[static_cast<std::size_t>(i)] = data_.phi1(i == cells ? c_.length : i * h);
        for (int i = 0; i < cells; ++i) {
            const double mid = data_.phi1((i + 0.5) * h);
            const auto k = static_cast<std::size_t>(i);
            big_phi_[k + 1] = big_phi_[k] + h / 6.0 * (rate_[k] + 4.0 * mid + rate_[k + 1]);
        }
    }

    InitialData data_;
    DerivedConstants c_;
    int cells_ = 0;
    std::vector<double> big_phi_;
    std::vector<double> rate_;
};

}  // namespace axstring::oracle
