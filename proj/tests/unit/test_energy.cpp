#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "axstring/coefficients.hpp"
#include "axstring/energy.hpp"

using namespace axstring;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralSolution sine_solution(double v, int n_max = 40) {
    return solve(StringConfig{kPi, v, InitialData::sine_mode(kPi, 0.1, 1), n_max, {256}});
}

TEST(EnergyAt, InitialEnergyIndependentOfSpeedWhenAtRest) {
    // phi1 = 0: the density collapses to phi0_x^2 / 2 for every v.
    for (double v : {0.0, 0.3, 0.7, 0.9}) {
        const auto e = initial_energies(InitialData::sine_mode(kPi, 0.1, 1), derive_constants(kPi, v));
        EXPECT_NEAR(e.cal_e, kPi / 400.0, 1e-12) << "v=" << v;
        EXPECT_NEAR(e.e, kPi / 400.0, 1e-12) << "v=" << v;
    }
}

TEST(EnergyAt, StandingWaveEnergyConstant) {
    const auto sol = sine_solution(0.0);
    for (double t : {0.0, 0.4, 1.7, 6.0}) {
        const auto s = energy_at(sol, t);
        EXPECT_NEAR(s.cal_e, kPi / 400.0, 1e-12);
        EXPECT_NEAR(s.e, kPi / 400.0, 1e-12);
    }
}

TEST(EnergyAt, ZeroData) {
    const auto sol = solve(StringConfig{1.0, 0.3, InitialData::zero(1.0), 10, {64}});
    const auto s = energy_at(sol, 0.5);
    EXPECT_EQ(s.cal_e, 0.0);
    EXPECT_EQ(s.e, 0.0);
    EXPECT_EQ(spectral_energy(sol), 0.0);
    const auto rep = energy_report(sol, {0.0, 1.0});
    EXPECT_TRUE(rep.vacuous);
    EXPECT_EQ(rep.bound_violations, 0);
}

TEST(SpectralEnergy, StandingWave) { EXPECT_NEAR(spectral_energy(sine_solution(0.0)), kPi / 400.0, 1e-13); }

TEST(SpectralEnergy, MatchesQuadratureAtTimeZero) {
    for (double v : {0.3, 0.7}) {
        const auto sol = sine_solution(v);
        const double spectral = spectral_energy(sol);
        EXPECT_NEAR(energy_at(sol, 0.0).cal_e / spectral, 1.0, 1e-6) << "v=" << v;
    }
}

TEST(EnergyReport, ConservationOverTwoPeriods) {
    for (double v : {0.3, 0.7}) {
        const auto sol = sine_solution(v);
        const auto rep = energy_report(sol, uniform_times(2.0 * sol.constants.period, 64));
        EXPECT_LT(rep.residual_conservation, 1e-6) << "v=" << v;
        EXPECT_LT(rep.residual_cross_identity, 1e-6) << "v=" << v;
        EXPECT_EQ(rep.bound_violations, 0) << "v=" << v;
        for (double e : rep.cal_e) EXPECT_GT(e, 0.0);
    }
}

TEST(EnergyReport, ConservationForOtherPresets) {
    for (const auto& d : {InitialData::bump(kPi, 1.0, 1.2, 0.2, VelocityMode::plus_slope),
                          InitialData::sine_velocity(kPi, 0.1, 2)}) {
        const auto sol = solve(StringConfig{kPi, 0.5, d, 40, {256}});
        const auto rep = energy_report(sol, uniform_times(sol.constants.period, 16));
        EXPECT_LT(rep.residual_conservation, 1e-6) << d.kind();
        EXPECT_EQ(rep.bound_violations, 0) << d.kind();
    }
}

TEST(EnergyReport, EqualityCasesOfTheSandwich) {
    for (double v : {0.3, 0.7}) {
        const auto c = derive_constants(kPi, v);
        const auto plus = initial_energies(InitialData::sine_mode(kPi, 0.1, 1, VelocityMode::plus_slope), c);
        EXPECT_NEAR(plus.e, plus.cal_e / (1.0 + v), 1e-8) << "v=" << v;
        const auto minus = initial_energies(InitialData::sine_mode(kPi, 0.1, 1, VelocityMode::minus_slope), c);
        EXPECT_NEAR(minus.e, minus.cal_e / (1.0 - v), 1e-8) << "v=" << v;
    }
}

TEST(EnergyReport, FunctionalsCoincideAtRest) {
    const auto sol = solve(StringConfig{kPi, 0.0, InitialData::bump(kPi, 1.0, 1.0, 0.3), 40, {256}});
    const auto rep = energy_report(sol, uniform_times(2.0 * kPi, 9));
    for (std::size_t i = 0; i < rep.times.size(); ++i) EXPECT_NEAR(rep.e[i], rep.cal_e[i], 1e-14);
    EXPECT_EQ(rep.bound_violations, 0);
}

TEST(EnergyReport, ValidatesTimes) {
    const auto sol = sine_solution(0.3, 5);
    EXPECT_THROW(energy_report(sol, {}), DomainError);
    EXPECT_THROW(energy_report(sol, {-1.0}), DomainError);
}

TEST(EnergyRate, CenteredDifferenceVanishes) {
    for (double v : {0.3, 0.7}) {
        const auto sol = sine_solution(v);
        const double h = sol.constants.period / 1024.0;
        const double e0 = spectral_energy(sol);
        for (double t : {0.3, 2.0, 5.5}) EXPECT_LT(std::abs(energy_rate(sol, t, h)) / e0, 1e-5) << "v=" << v;
    }
}

TEST(EnergyReport, UsualEnergyIsPeriodic) {
    const auto sol = sine_solution(0.7);
    const double T = sol.constants.period;
    const double e0 = spectral_energy(sol);
    for (double t : {0.1, 1.3, 4.0}) EXPECT_LT(std::abs(energy_at(sol, t + T).e - energy_at(sol, t).e), 1e-6 * e0);
}

TEST(EnergyReport, UsualEnergyVariesWhenMoving) {
    const auto sol = sine_solution(0.7);
    const auto rep = energy_report(sol, uniform_times(sol.constants.period, 32));
    const auto [lo, hi] = std::minmax_element(rep.e.begin(), rep.e.end());
    EXPECT_GT(*hi / *lo, 1.05);
}

TEST(EnergyReport, NearCriticalGrowthIsBounded) {
    const auto sol = sine_solution(0.9);
    const auto rep = energy_report(sol, uniform_times(sol.constants.period, 64));
    const auto [lo, hi] = std::minmax_element(rep.e.begin(), rep.e.end());
    EXPECT_LE(*hi / *lo, sol.constants.gamma);
    EXPECT_GE(*hi / *lo, 2.0);
    EXPECT_EQ(rep.bound_violations, 0);
}

TEST(UniformTimes, CoversInterval) {
    const auto t = uniform_times(2.0, 5);
    ASSERT_EQ(t.size(), 5u);
    EXPECT_EQ(t.front(), 0.0);
    EXPECT_EQ(t.back(), 2.0);
    EXPECT_EQ(uniform_times(3.0, 1).size(), 1u);
}

}  // namespace
