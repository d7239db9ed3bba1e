#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "axstring/coefficients.hpp"
#include "axstring/domain.hpp"
#include "axstring/errors.hpp"

namespace axstring {

/// phi and its first derivatives at one space-time point.
struct FieldSample {
    double x = 0.0;
    double t = 0.0;
    double phi = 0.0;
    double phi_x = 0.0;
    double phi_t = 0.0;
    double imag_residual = 0.0;  ///< largest discarded imaginary part
};

/// phi_x(x_b + vt, t) sampled at `times`.
struct TraceSeries {
    Endpoint endpoint = Endpoint::left;
    std::vector<double> times;
    std::vector<double> values;
    double imag_residual = 0.0;
};

namespace detail {

/// Kahan-Babuska (Neumaier) summation.
template <class T>
class CompensatedSum {
public:
    void add(const T& y) {
        if constexpr (std::is_same_v<T, Complex>) {
            add_real(sum_re_, comp_re_, y.real());
            add_real(sum_im_, comp_im_, y.imag());
        } else {
            add_real(sum_re_, comp_re_, y);
        }
    }
    T value() const {
        if constexpr (std::is_same_v<T, Complex>) return {sum_re_ + comp_re_, sum_im_ + comp_im_};
        else return sum_re_ + comp_re_;
    }

private:
    static void add_real(double& sum, double& comp, double y) {
        const double t = sum + y;
        if (std::abs(sum) >= std::abs(y)) comp += (sum - t) + y;
        else comp += (y - t) + sum;
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

template <class T>
class PlainSum {
public:
    void add(const T& y) { sum_ += y; }
    T value() const { return sum_; }

private:
    T sum_{};
};

inline constexpr int kCompensationThreshold = 100;

template <template <class> class Acc>
FieldSample eval_field_with(const SpectralSolution& sol, double x, double t) {
    const auto& c = sol.constants;
    const double v = c.speed;
    const double pi = std::numbers::pi;
    const double a = pi * (1.0 - v) * (t + x) / c.length;
    const double b = pi * (1.0 + v) * (t - x) / c.length;
    Acc<Complex> phi, phi_x, phi_t;
    for (int n : sol.coefficients.indices()) {
        const Complex cn = sol.coefficients[n];
        const Complex ea = std::polar(1.0, n * a);
        const Complex eb = std::polar(1.0, n * b);
        phi.add(cn * (ea - eb));
        const Complex ncn = static_cast<double>(n) * cn;
        phi_x.add(ncn * ((1.0 - v) * ea + (1.0 + v) * eb));
        phi_t.add(ncn * ((1.0 - v) * ea - (1.0 + v) * eb));
    }
    const Complex scale(0.0, pi / c.length);
    const Complex px = scale * phi_x.value();
    const Complex pt = scale * phi_t.value();
    const Complex p = phi.value();
    return FieldSample{x, t, p.real(), px.real(), pt.real(),
                       std::max({std::abs(p.imag()), std::abs(px.imag()), std::abs(pt.imag())})};
}

template <template <class> class Acc>
std::pair<double, double> boundary_slope_with(const SpectralSolution& sol, Endpoint e, double t) {
    const auto& c = sol.constants;
    const double pi = std::numbers::pi;
    Acc<Complex> acc;
    for (int n : sol.coefficients.indices()) {
        double phase = 2.0 * n * pi * t / c.period;
        if (e == Endpoint::right) phase -= n * pi * (1.0 + c.speed);
        acc.add(static_cast<double>(n) * sol.coefficients[n] * std::polar(1.0, phase));
    }
    const Complex value = Complex(0.0, 2.0 * pi / c.length) * acc.value();
    return {value.real(), std::abs(value.imag())};
}

inline void check_in_interval(const DerivedConstants& c, double x, double t) {
    if (!(t >= 0.0)) throw DomainError("series: t must be >= 0");
    const double slack = 1e-12 * std::max(1.0, std::abs(x));
    const double left = c.speed * t;
    if (x < left - slack || x > left + c.length + slack) {
        std::ostringstream os;
        os.precision(17);
        os << "series: x = " << x << " outside the moving interval [" << left << ", "
           << left + c.length << "] at t = " << t;
        throw DomainError(os.str());
    }
}

}  // namespace detail

/// Truncated series value and derivatives at (x, t), x in [vt, L + vt].
///
/// Summation runs n = -n_max..-1, 1..n_max; for n_max > 100 the sums are
/// compensated. The imaginary parts are reported, not dropped silently.
inline FieldSample eval_field(const SpectralSolution& sol, double x, double t) {
    detail::check_in_interval(sol.constants, x, t);
    if (sol.coefficients.n_max() > detail::kCompensationThreshold)
        return detail::eval_field_with<detail::CompensatedSum>(sol, x, t);
    return detail::eval_field_with<detail::PlainSum>(sol, x, t);
}

/// Closed-form phi_x at the moving endpoint x_b + vt: a single Fourier
/// series in t with period T_v.
inline double boundary_slope(const SpectralSolution& sol, Endpoint e, double t,
                             double* imag_residual = nullptr) {
    auto [re, im] = sol.coefficients.n_max() > detail::kCompensationThreshold
                        ? detail::boundary_slope_with<detail::CompensatedSum>(sol, e, t)
                        : detail::boundary_slope_with<detail::PlainSum>(sol, e, t);
    if (imag_residual) *imag_residual = std::max(*imag_residual, im);
    return re;
}

inline TraceSeries boundary_trace(const SpectralSolution& sol, Endpoint e, std::vector<double> times) {
    if (times.empty()) throw DomainError("boundary_trace: times must be non-empty");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw DomainError("boundary_trace: times must be >= 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw DomainError("boundary_trace: times must be strictly increasing");
    }
    TraceSeries out{e, std::move(times), {}, 0.0};
    out.values.reserve(out.times.size());
    for (double t : out.times) out.values.push_back(boundary_slope(sol, e, t, &out.imag_residual));
    return out;
}

/// Max over samples of |phi(x + v T_v, t + T_v) - phi(x, t)| for any field evaluator.
template <class Field>
double periodicity_residual(Field&& phi, const DerivedConstants& c,
                            const std::vector<std::pair<double, double>>& samples) {
    double m = 0.0;
    for (auto [x, t] : samples) {
        const double shifted = phi(x + c.speed * c.period, t + c.period);
        m = std::max(m, std::abs(shifted - phi(x, t)));
    }
    return m;
}

inline double check_periodicity(const SpectralSolution& sol,
                                const std::vector<std::pair<double, double>>& samples) {
    return periodicity_residual([&](double x, double t) { return eval_field(sol, x, t).phi; },
                                sol.constants, samples);
}

/// Panel density that resolves the squared series integrands: the highest
/// angular frequency of phi_x^2 is 2 n_max pi (1+v)/L and we keep h*k <= 0.2.
inline int resolved_panels_per_unit(const SpectralSolution& sol) {
    const auto& c = sol.constants;
    const double k_max = 2.0 * sol.coefficients.n_max() * std::numbers::pi * (1.0 + c.speed) / c.length;
    return std::max(sol.config.quadrature.panels_per_unit, static_cast<int>(std::ceil(5.0 * k_max)));
}

}  // namespace axstring
