#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "axstring/domain.hpp"
#include "axstring/errors.hpp"
#include "axstring/initial_data.hpp"

namespace axstring::oracle {

/// Implicit three-level scheme for u_tt - 2v u_et - (1 - v^2) u_ee = 0 on the
/// frozen interval eta = x - vt in [0, L], u = 0 at both ends.
///
///   (u+ - 2u + u-)/dt^2
///   - 2v (u+_{j+1} - u+_{j-1} - u-_{j+1} + u-_{j-1}) / (4 de dt)
///   - (1 - v^2) [theta D2 u+ + (1 - 2 theta) D2 u + theta D2 u-] = 0,  theta = 1/4
///
/// One tridiagonal solve per step. dt = cfl (1 - v) de.
class FrozenFrameSolver {
public:
    static constexpr double kTheta = 0.25;

    FrozenFrameSolver(const InitialData& data, const DerivedConstants& c, int nx, double cfl)
        : c_(c), nx_(nx) {
        if (nx < 32) throw DomainError("fd: nx must be >= 32");
        if (!(cfl > 0.0 && cfl <= 0.5)) throw DomainError("fd: cfl must lie in (0, 0.5]");
        de_ = c.length / nx;
        dt_ = cfl * (1.0 - c.speed) * de_;
        assemble();
        seed(data);
    }

    double eta_step() const { return de_; }
    double time_step() const { return dt_; }
    double time() const { return steps_ * dt_; }
    long steps() const { return steps_; }
    int nx() const { return nx_; }

    /// Current level u(eta_j, t), j = 0..nx.
    const std::vector<double>& state() const { return cur_; }
    const std::vector<double>& previous_state() const { return prev_; }

    void step() {
        const double v = c_.speed;
        const double k = (1.0 - v * v) / (de_ * de_);
        const double m = v / (2.0 * de_ * dt_);
        const std::size_t n = cur_.size();
        std::vector<double> rhs(n, 0.0);
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double d2_cur = cur_[j + 1] - 2.0 * cur_[j] + cur_[j - 1];
            const double d2_prev = prev_[j + 1] - 2.0 * prev_[j] + prev_[j - 1];
            rhs[j] = (2.0 * cur_[j] - prev_[j]) / (dt_ * dt_) +
                     k * ((1.0 - 2.0 * kTheta) * d2_cur + kTheta * d2_prev) -
                     m * (prev_[j + 1] - prev_[j - 1]);
        }
        std::vector<double> next(n, 0.0);
        solve_tridiagonal(rhs, next);
        prev_ = std::move(cur_);
        cur_ = std::move(next);
        ++steps_;
    }

    /// Discrete calE at the current level: 1/2 sum (u_t^2 + (1 - v^2) u_e^2) de,
    /// u_t from (cur - prev)/dt at the half step, u_e averaged over both levels.
    double energy() const {
        const double v = c_.speed;
        double acc = 0.0;
        for (std::size_t j = 0; j + 1 < cur_.size(); ++j) {
            const double ut = 0.5 * ((cur_[j] - prev_[j]) + (cur_[j + 1] - prev_[j + 1])) / dt_;
            const double ue = 0.5 * ((cur_[j + 1] - cur_[j]) + (prev_[j + 1] - prev_[j])) / de_;
            acc += 0.5 * (ut * ut + (1.0 - v * v) * ue * ue) * de_;
        }
        return acc;
    }

    /// Linear interpolation in eta of a level.
    double interpolate(const std::vector<double>& level, double eta) const {
        eta = std::clamp(eta, 0.0, c_.length);
        std::size_t j = static_cast<std::size_t>(eta / de_);
        if (j >= static_cast<std::size_t>(nx_)) j = static_cast<std::size_t>(nx_) - 1;
        const double u = (eta - j * de_) / de_;
        return (1.0 - u) * level[j] + u * level[j + 1];
    }

private:
    void assemble() {
        const double v = c_.speed;
        const double k = (1.0 - v * v) / (de_ * de_);
        const double m = v / (2.0 * de_ * dt_);
        diag_ = 1.0 / (dt_ * dt_) + 2.0 * kTheta * k;
        upper_ = -kTheta * k - m;
        lower_ = -kTheta * k + m;
        if (std::abs(diag_) < std::abs(upper_) + std::abs(lower_)) {
            std::ostringstream os;
            os << "fd: tridiagonal system is not diagonally dominant (|d| = " << std::abs(diag_)
               << " < " << std::abs(upper_) + std::abs(lower_) << "); reduce the time step (cfl)";
            throw SolverConfigError(os.str());
        }
    }

    // First level from a second-order Taylor step with
    // u_t(eta, 0) = phi1 + v phi0_x and u_tt = 2v u_et + (1 - v^2) u_ee.
    void seed(const InitialData& data) {
        const double v = c_.speed;
        const std::size_t n = static_cast<std::size_t>(nx_) + 1;
        std::vector<double> u0(n), ut(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double eta = j + 1 == n ? c_.length : j * de_;
            u0[j] = data.phi0(eta);
            ut[j] = data.phi1(eta) + v * data.phi0_x(eta);
        }
        u0.front() = u0.back() = 0.0;
        std::vector<double> u1(n, 0.0);
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double u_ee = (u0[j + 1] - 2.0 * u0[j] + u0[j - 1]) / (de_ * de_);
            const double u_et = (ut[j + 1] - ut[j - 1]) / (2.0 * de_);
            const double u_tt = 2.0 * v * u_et + (1.0 - v * v) * u_ee;
            u1[j] = u0[j] + dt_ * ut[j] + 0.5 * dt_ * dt_ * u_tt;
        }
        prev_ = std::move(u0);
        cur_ = std::move(u1);
        steps_ = 1;
    }

    // Thomas algorithm on the interior unknowns j = 1..nx-1.
    void solve_tridiagonal(const std::vector<double>& rhs, std::vector<double>& out) const {
        const std::size_t n = rhs.size();
        const std::size_t m = n - 2;
        std::vector<double> cp(m), dp(m);
        cp[0] = upper_ / diag_;
        dp[0] = rhs[1] / diag_;
        for (std::size_t i = 1; i < m; ++i) {
            const double denom = diag_ - lower_ * cp[i - 1];
            cp[i] = upper_ / denom;
            dp[i] = (rhs[i + 1] - lower_ * dp[i - 1]) / denom;
        }
        out[m] = dp[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) out[i + 1] = dp[i] - cp[i] * out[i + 2];
        out.front() = out.back() = 0.0;
    }

    DerivedConstants c_;
    int nx_;
    double de_ = 0.0;
    double dt_ = 0.0;
    double diag_ = 0.0, upper_ = 0.0, lower_ = 0.0;
    long steps_ = 0;
    std::vector<double> prev_, cur_;
};

/// Stored FD levels mapped back to the moving frame.
struct FdHistory {
    DerivedConstants constants;
    double eta_step = 0.0;
    std::vector<double> times;
    std::vector<std::vector<double>> levels;
    std::vector<double> energies;  ///< discrete calE per stored level

    /// phi(x, t) by linear interpolation in eta = x - vt and in time.
    double value(double x, double t) const {
        if (times.empty()) throw DomainError("fd history is empty");
        if (t < times.front() || t > times.back()) throw DomainError("fd history: t outside stored range");
        std::size_t i = static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
        if (i == 0) i = 1;
        if (i >= times.size()) i = times.size() - 1;
        const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
        const double eta = x - constants.speed * t;
        return (1.0 - w) * at(levels[i - 1], eta) + w * at(levels[i], eta);
    }

private:
    double at(const std::vector<double>& level, double eta) const {
        const std::size_t nx = level.size() - 1;
        eta = std::clamp(eta, 0.0, constants.length);
        std::size_t j = static_cast<std::size_t>(eta / eta_step);
        if (j >= nx) j = nx - 1;
        const double u = (eta - j * eta_step) / eta_step;
        return (1.0 - u) * level[j] + u * level[j + 1];
    }
};

/// Run the frozen-frame scheme to t_end, keeping every `store_every`-th level.
inline FdHistory fd_solve(const InitialData& data, const DerivedConstants& c, int nx, double cfl, double t_end,
                          int store_every = 1) {
    if (store_every < 1) throw DomainError("fd: store_every must be >= 1");
    FrozenFrameSolver solver(data, c, nx, cfl);
    FdHistory h{c, solver.eta_step(), {}, {}, {}};
    h.times.push_back(0.0);
    h.levels.push_back(solver.previous_state());
    h.energies.push_back(solver.energy());
    auto keep = [&] {
        h.times.push_back(solver.time());
        h.levels.push_back(solver.state());
        h.energies.push_back(solver.energy());
    };
    if (store_every == 1) keep();
    while (solver.time() < t_end - 1e-12 * std::max(1.0, t_end)) {
        solver.step();
        if (solver.steps() % store_every == 0) keep();
    }
    if (h.times.back() != solver.time()) keep();
    return h;
}

/// phi at arbitrary (x, t) points from one FD sweep, without storing history.
inline std::vector<double> fd_sample(const InitialData& data, const DerivedConstants& c, int nx, double cfl,
                                     const std::vector<std::pair<double, double>>& points) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a].second < points[b].second; });
    FrozenFrameSolver solver(data, c, nx, cfl);
    std::vector<double> out(points.size(), 0.0);
    for (std::size_t idx : order) {
        const auto [x, t] = points[idx];
        if (t < 0.0) throw DomainError("fd_sample: t must be >= 0");
        while (solver.time() < t) solver.step();
        const double t1 = solver.time();
        const double t0 = t1 - solver.time_step();
        const double w = std::clamp((t - t0) / solver.time_step(), 0.0, 1.0);
        const double eta = x - c.speed * t;
        out[idx] = (1.0 - w) * solver.interpolate(solver.previous_state(), eta) +
                   w * solver.interpolate(solver.state(), eta);
    }
    return out;
}

}  // namespace axstring::oracle
