#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "axstring/errors.hpp"

namespace axstring {

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
class NaturalCubicSpline {
public:
    NaturalCubicSpline() = default;

    NaturalCubicSpline(std::span<const double> x, std::span<const double> y)
        : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
        if (x_.size() != y_.size()) throw DomainError("spline: x and y sizes differ");
        if (x_.size() < 2) throw DomainError("spline: need at least two knots");
        for (std::size_t i = 1; i < x_.size(); ++i)
            if (!(x_[i] > x_[i - 1])) throw DomainError("spline: knots must be strictly increasing");
        solve_second_derivatives();
    }

    double operator()(double x) const {
        auto [i, a, b, h] = locate(x);
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    double derivative(double x) const {
        auto [i, a, b, h] = locate(x);
        return (y_[i + 1] - y_[i]) / h +
               (-(3.0 * a * a - 1.0) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
    }

    std::span<const double> knots() const { return x_; }
    std::span<const double> values() const { return y_; }

private:
    struct Cell {
        std::size_t i;
        double a, b, h;
    };

    Cell locate(double x) const {
        x = std::clamp(x, x_.front(), x_.back());
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
        if (i >= x_.size() - 1) i = x_.size() - 2;
        const double h = x_[i + 1] - x_[i];
        const double b = (x - x_[i]) / h;
        return {i, 1.0 - b, b, h};
    }

    // Tridiagonal system for the knot second derivatives with m_0 = m_n = 0.
    void solve_second_derivatives() {
        const std::size_t n = x_.size();
        m_.assign(n, 0.0);
        if (n < 3) return;
        std::vector<double> c(n, 0.0), d(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            const double diag = 2.0 * (h0 + h1);
            const double rhs = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
            const double denom = diag - h0 * c[i - 1];
            c[i] = h1 / denom;
            d[i] = (rhs - h0 * d[i - 1]) / denom;
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = d[i] - c[i] * m_[i + 1];
            if (i == 1) break;
        }
    }

    std::vector<double> x_, y_, m_;
};

}  // namespace axstring
