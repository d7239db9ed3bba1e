#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "axstring/domain.hpp"
#include "axstring/errors.hpp"
#include "axstring/extension.hpp"
#include "axstring/quadrature.hpp"

namespace axstring {

using Complex = std::complex<double>;

/// c_n for n in {-n_max, ..., -1, 1, ..., n_max}. There is no n = 0 entry.
class CoefficientTable {
public:
    CoefficientTable() = default;
    explicit CoefficientTable(int n_max)
        : n_max_(n_max), values_(2 * static_cast<std::size_t>(n_max)) {
        if (n_max < 1) throw DomainError("coefficient table: n_max must be >= 1");
    }

    int n_max() const { return n_max_; }

    Complex operator[](int n) const { return values_[index(n)]; }
    Complex& operator[](int n) { return values_[index(n)]; }

    Complex at(int n) const {
        if (n == 0 || std::abs(n) > n_max_) {
            std::ostringstream os;
            os << "coefficient table: index " << n << " outside Z* with |n| <= " << n_max_;
            throw DomainError(os.str());
        }
        return (*this)[n];
    }

    /// Indices in summation order: -n_max..-1, 1..n_max.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(values_.size());
        for (int n = -n_max_; n <= n_max_; ++n)
            if (n != 0) out.push_back(n);
        return out;
    }

private:
    std::size_t index(int n) const {
        return static_cast<std::size_t>(n < 0 ? n + n_max_ : n + n_max_ - 1);
    }

    int n_max_ = 0;
    std::vector<Complex> values_;
};

namespace detail {

// Samples (x_i, w_i * g(x_i)) of one branch of an extension combination over
// its segment, split at the mapped data breakpoints.
struct WeightedSample {
    double x;
    double wg;
};

inline void sample_branch(std::vector<WeightedSample>& out, const ExtensionField& slope,
                          const ExtensionField& velocity, ExtensionBranch branch, double a, double b,
                          double velocity_sign, int panels_per_unit) {
    Panelization p{a, b, slope.mapped_breakpoints(branch), panels_per_unit};
    for (const auto& seg : p.segments()) {
        for (const auto& node : simpson_nodes(seg)) {
            const double g = slope.branch_value(branch, node.x) +
                             velocity_sign * velocity.branch_value(branch, node.x);
            if (!std::isfinite(g)) throw_non_finite(node.x);
            out.push_back({node.x, node.weight * g});
        }
    }
}

// Panel density for the projection: at least 8 panels per radian of the
// fastest exponential exp(i n_max k x), never below the configured density.
inline int projection_panels_per_unit(const QuadratureSpec& q, double k, int n_max) {
    return std::max(q.panels_per_unit, static_cast<int>(std::ceil(8.0 * std::abs(k) * n_max)));
}

// c_n = 1/(4 n pi i) * sum_i w_i g(x_i) exp(i * n * k * x_i), summed left to right.
inline CoefficientTable project(const std::vector<WeightedSample>& samples, double k, int n_max) {
    CoefficientTable table(n_max);
    for (int n : table.indices()) {
        Complex acc{};
        for (const auto& s : samples) acc += s.wg * std::polar(1.0, n * k * s.x);
        table[n] = acc / (4.0 * n * std::numbers::pi * Complex(0.0, 1.0));
    }
    return table;
}

}  // namespace detail

/// c_n from the right-extended combination phi~_x + phi~_t on (0, L2).
inline CoefficientTable coefficients_plus(const InitialData& data, const DerivedConstants& c,
                                          int n_max, const QuadratureSpec& q = {}) {
    const ExtensionField slope(data, c, FieldKind::slope);
    const ExtensionField velocity(data, c, FieldKind::velocity);
    const double k = -std::numbers::pi * (1.0 - c.speed) / c.length;
    const int ppu = detail::projection_panels_per_unit(q, k, n_max);
    std::vector<detail::WeightedSample> samples;
    detail::sample_branch(samples, slope, velocity, ExtensionBranch::middle, 0.0, c.length, +1.0, ppu);
    detail::sample_branch(samples, slope, velocity, ExtensionBranch::right, c.length, c.l2, +1.0, ppu);
    return detail::project(samples, k, n_max);
}

/// c_n from the left-extended combination phi~_x - phi~_t on (-L1, L).
inline CoefficientTable coefficients_minus(const InitialData& data, const DerivedConstants& c,
                                           int n_max, const QuadratureSpec& q = {}) {
    const ExtensionField slope(data, c, FieldKind::slope);
    const ExtensionField velocity(data, c, FieldKind::velocity);
    const double k = std::numbers::pi * (1.0 + c.speed) / c.length;
    const int ppu = detail::projection_panels_per_unit(q, k, n_max);
    std::vector<detail::WeightedSample> samples;
    detail::sample_branch(samples, slope, velocity, ExtensionBranch::left, -c.l1, 0.0, -1.0, ppu);
    detail::sample_branch(samples, slope, velocity, ExtensionBranch::middle, 0.0, c.length, -1.0, ppu);
    return detail::project(samples, k, n_max);
}

inline double max_abs_difference(const CoefficientTable& a, const CoefficientTable& b) {
    if (a.n_max() != b.n_max()) throw DomainError("coefficient tables differ in size");
    double m = 0.0;
    for (int n : a.indices()) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

/// Truncated series solution. `coefficients` holds the (+) formula; the (-)
/// formula is kept for the cross check.
struct SpectralSolution {
    StringConfig config;
    DerivedConstants constants;
    CoefficientTable coefficients;
    CoefficientTable coefficients_minus;
    double cross_check_residual = 0.0;  ///< max_n |c_n(+) - c_n(-)|

    /// max_n |c_{-n} - conj(c_n)|; zero for exactly real data.
    double conjugate_residual() const {
        double m = 0.0;
        for (int n = 1; n <= coefficients.n_max(); ++n)
            m = std::max(m, std::abs(coefficients[-n] - std::conj(coefficients[n])));
        return m;
    }
};

inline SpectralSolution solve(const StringConfig& cfg) {
    const DerivedConstants c = derive_constants(cfg);
    SpectralSolution sol{cfg, c, coefficients_plus(cfg.initial, c, cfg.n_max, cfg.quadrature),
                         coefficients_minus(cfg.initial, c, cfg.n_max, cfg.quadrature), 0.0};
    sol.cross_check_residual = max_abs_difference(sol.coefficients, sol.coefficients_minus);
    return sol;
}

/// sum |n c_n|^2 over the truncated table and the two integral forms it
/// equals for the untruncated series.
struct ParsevalSums {
    double truncated = 0.0;
    double plus_integral = 0.0;   ///< L/(8 pi^2 (1-v)) * int_0^L2 (phi~_x + phi~_t)^2
    double minus_integral = 0.0;  ///< L/(8 pi^2 (1+v)) * int_-L1^L (phi~_x - phi~_t)^2
};

inline double weighted_square_sum(const CoefficientTable& c) {
    double s = 0.0;
    for (int n : c.indices()) s += std::norm(static_cast<double>(n) * c[n]);
    return s;
}

inline ParsevalSums parseval_sum(const SpectralSolution& sol) {
    const auto& c = sol.constants;
    const auto& data = sol.config.initial;
    // Reference integrals: one-dimensional and cheap, so they run at 16x the
    // configured density to stay well below the projection's quadrature noise.
    const int ppu = 16 * sol.config.quadrature.panels_per_unit;
    const ExtensionField slope(data, c, FieldKind::slope);
    const ExtensionField velocity(data, c, FieldKind::velocity);

    auto branch_integral = [&](ExtensionBranch br, double a, double b, double sign) {
        Panelization p{a, b, slope.mapped_breakpoints(br), ppu};
        return integrate(
            [&](double x) {
                const double g = slope.branch_value(br, x) + sign * velocity.branch_value(br, x);
                return g * g;
            },
            p);
    };

    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double plus = branch_integral(ExtensionBranch::middle, 0.0, c.length, +1.0) +
                        branch_integral(ExtensionBranch::right, c.length, c.l2, +1.0);
    const double minus = branch_integral(ExtensionBranch::left, -c.l1, 0.0, -1.0) +
                         branch_integral(ExtensionBranch::middle, 0.0, c.length, -1.0);
    return ParsevalSums{
        .truncated = weighted_square_sum(sol.coefficients),
        .plus_integral = c.length / (8.0 * pi2 * (1.0 - c.speed)) * plus,
        .minus_integral = c.length / (8.0 * pi2 * (1.0 + c.speed)) * minus,
    };
}

}  // namespace axstring
