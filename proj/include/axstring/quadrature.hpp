#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "axstring/errors.hpp"

namespace axstring {

/// Interval (a, b) cut at mandatory breakpoints, each piece filled with an
/// even number (>= 2) of uniform Simpson panels.
struct Panelization {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> breakpoints;
    int panels_per_unit = 256;

    struct Segment {
        double a;
        double b;
        int panels;  // even, >= 2
    };

    std::vector<Segment> segments() const {
        if (!(a < b)) throw DomainError("panelization: need a < b");
        if (panels_per_unit < 1) throw DomainError("panelization: panels_per_unit must be >= 1");
        std::vector<double> cuts{a};
        std::vector<double> inner = breakpoints;
        std::sort(inner.begin(), inner.end());
        for (double p : inner)
            if (p > cuts.back() && p < b) cuts.push_back(p);
        cuts.push_back(b);
        std::vector<Segment> out;
        out.reserve(cuts.size() - 1);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            out.push_back({cuts[i], cuts[i + 1], panels_for(cuts[i + 1] - cuts[i], panels_per_unit)});
        return out;
    }

    static int panels_for(double width, int per_unit) {
        int n = static_cast<int>(std::ceil(width * per_unit));
        n = std::max(n, 2);
        return n % 2 == 0 ? n : n + 1;
    }
};

struct QuadratureNode {
    double x;
    double weight;
};

/// Composite Simpson nodes and weights for one smooth segment.
inline std::vector<QuadratureNode> simpson_nodes(const Panelization::Segment& s) {
    const int n = s.panels;
    const double h = (s.b - s.a) / n;
    std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double x = i == n ? s.b : s.a + i * h;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        nodes[static_cast<std::size_t>(i)] = {x, w * h / 3.0};
    }
    return nodes;
}

namespace detail {

inline bool is_finite_value(double y) { return std::isfinite(y); }
inline bool is_finite_value(const std::complex<double>& y) {
    return std::isfinite(y.real()) && std::isfinite(y.imag());
}

[[noreturn]] inline void throw_non_finite(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature: non-finite integrand value at node x = " << x;
    throw EvaluationError(os.str());
}

}  // namespace detail

/// Composite Simpson over one segment; f is evaluated at both segment ends,
/// so a piecewise integrand can be integrated branch by branch with
/// one-sided values at the cuts.
template <class F>
auto integrate_segment(F&& f, const Panelization::Segment& s) {
    using R = std::decay_t<std::invoke_result_t<F&, double>>;
    R acc{};
    for (const auto& node : simpson_nodes(s)) {
        const R y = f(node.x);
        if (!detail::is_finite_value(y)) detail::throw_non_finite(node.x);
        acc += node.weight * y;
    }
    return acc;
}

/// Integral of f over p.a..p.b, split at every breakpoint, summed left to right.
template <class F>
auto integrate(F&& f, const Panelization& p) {
    using R = std::decay_t<std::invoke_result_t<F&, double>>;
    R acc{};
    for (const auto& s : p.segments()) acc += integrate_segment(f, s);
    return acc;
}

/// Convenience overload without interior breakpoints.
template <class F>
auto integrate(F&& f, double a, double b, int panels_per_unit) {
    return integrate(std::forward<F>(f), Panelization{a, b, {}, panels_per_unit});
}

}  // namespace axstring
