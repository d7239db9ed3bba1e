#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "axstring/extension.hpp"
#include "axstring/quadrature.hpp"

using namespace axstring;

namespace {

constexpr double kPi = std::numbers::pi;

/// phi0 = 0, phi1 = sin(x) on (0, pi) expressed through the sine_velocity preset.
InitialData sine_velocity() { return InitialData::sine_velocity(kPi, 1.0, 1); }
InitialData sine_tenth() { return InitialData::sine_mode(kPi, 0.1, 1); }

TEST(ExtendSlope, EvenAtRest) {
    const auto c = derive_constants(kPi, 0.0);
    const auto d = sine_tenth();
    EXPECT_NEAR(extend_slope(d, c, -0.5), std::cos(0.5) / 10.0, 1e-15);
    EXPECT_NEAR(extend_slope(d, c, 0.5), std::cos(0.5) / 10.0, 1e-15);
}

TEST(ExtendSlope, LeftBranchScaling) {
    const auto c = derive_constants(kPi, 0.3);
    const double g = 13.0 / 7.0;
    EXPECT_NEAR(extend_slope(sine_tenth(), c, -0.5), g * std::cos(g * 0.5) / 10.0, 1e-15);
}

TEST(ExtendSlope, RightBranchScaling) {
    const auto c = derive_constants(kPi, 0.3);
    const double g = 13.0 / 7.0;
    const double x = kPi + 0.4;
    EXPECT_NEAR(extend_slope(sine_tenth(), c, x), std::cos(-x / g + 2.0 * kPi / 1.3) / (10.0 * g), 1e-15);
}

TEST(ExtendSlope, MiddleBranchIsIdentity) {
    for (double v : {0.0, 0.3, 0.7, 0.9}) {
        const auto c = derive_constants(kPi, v);
        const auto d = InitialData::bump(kPi, 1.2, 1.0, 0.3);
        for (double x : {0.0, 0.4, 1.0, 1.5, kPi})
            EXPECT_EQ(extend_slope(d, c, x), d.phi0_x(x)) << "v=" << v << " x=" << x;
    }
}

TEST(ExtendVelocity, ZeroVelocityStaysZero) {
    const auto c = derive_constants(kPi, 0.3);
    for (double x = -c.l1; x <= c.l2; x += 0.05) EXPECT_EQ(extend_velocity(sine_tenth(), c, x), 0.0);
}

TEST(ExtendVelocity, OddAtRest) {
    const auto c = derive_constants(kPi, 0.0);
    EXPECT_NEAR(extend_velocity(sine_velocity(), c, -0.5), -std::sin(0.5), 1e-15);
}

TEST(ExtendVelocity, RightBranchScaling) {
    const auto c = derive_constants(kPi, 0.3);
    const double g = 13.0 / 7.0;
    // Source point 2L/(1+v) - x/gamma maps L to L.
    const double s = 2.0 * kPi / 1.3 - (kPi + 0.1) / g;
    EXPECT_NEAR(s, kPi - 0.1 / g, 1e-14);
    EXPECT_NEAR(extend_velocity(sine_velocity(), c, kPi + 0.1), -(1.0 / g) * std::sin(s), 1e-15);
}

TEST(ExtendVelocity, LeftBranchScaling) {
    const auto c = derive_constants(kPi, 0.7);
    EXPECT_NEAR(extend_velocity(sine_velocity(), c, -0.2), -c.gamma * std::sin(c.gamma * 0.2), 1e-14);
}

TEST(Extension, SymmetryAboutBothSupportsAtRest) {
    const auto c = derive_constants(kPi, 0.0);
    const auto d = InitialData::bump(kPi, 1.0, 1.2, 0.5, VelocityMode::plus_slope);
    for (double s : {0.1, 0.7, 1.3, 2.9}) {
        EXPECT_NEAR(extend_slope(d, c, -s), extend_slope(d, c, s), 1e-14);
        EXPECT_NEAR(extend_velocity(d, c, -s), -extend_velocity(d, c, s), 1e-14);
        EXPECT_NEAR(extend_slope(d, c, kPi + s), extend_slope(d, c, kPi - s), 1e-14);
        EXPECT_NEAR(extend_velocity(d, c, kPi + s), -extend_velocity(d, c, kPi - s), 1e-14);
    }
}

TEST(Extension, OutsideRangeIsDomainError) {
    const auto c = derive_constants(kPi, 0.3);
    EXPECT_THROW(extend_slope(sine_tenth(), c, -c.l1 - 0.01), DomainError);
    EXPECT_THROW(extend_velocity(sine_tenth(), c, c.l2 + 0.01), DomainError);
    EXPECT_NO_THROW(extend_slope(sine_tenth(), c, -c.l1));
    EXPECT_NO_THROW(extend_slope(sine_tenth(), c, c.l2));
}

TEST(Extension, HalfOpenBranchConvention) {
    const auto c = derive_constants(kPi, 0.3);
    const ExtensionField f(sine_tenth(), c, FieldKind::slope);
    EXPECT_EQ(f.branch_of(-c.l1), ExtensionBranch::left);
    EXPECT_EQ(f.branch_of(-1e-9), ExtensionBranch::left);
    EXPECT_EQ(f.branch_of(0.0), ExtensionBranch::middle);
    EXPECT_EQ(f.branch_of(kPi), ExtensionBranch::middle);
    EXPECT_EQ(f.branch_of(std::nextafter(kPi, 10.0)), ExtensionBranch::right);
    EXPECT_EQ(f.branch_of(c.l2), ExtensionBranch::right);
    // The outer ends map to the reflected images of L and 0.
    EXPECT_NEAR(f.source_point(ExtensionBranch::left, -c.l1), kPi, 1e-14);
    EXPECT_NEAR(f.source_point(ExtensionBranch::right, c.l2), 0.0, 1e-14);
    const auto bp = f.breakpoints();
    EXPECT_EQ(bp[0], -c.l1);
    EXPECT_EQ(bp[1], 0.0);
    EXPECT_EQ(bp[2], kPi);
    EXPECT_EQ(bp[3], c.l2);
}

TEST(Extension, SlopeJumpsAtSupportsWhenMoving) {
    const auto c = derive_constants(kPi, 0.3);
    const ExtensionField f(sine_tenth(), c, FieldKind::slope);
    const double left = f.branch_value(ExtensionBranch::left, 0.0);
    const double mid = f.branch_value(ExtensionBranch::middle, 0.0);
    EXPECT_NEAR(left, c.gamma * mid, 1e-15);
    EXPECT_GT(std::abs(left - mid), 1e-3);
}

// The reflected antiderivative vanishes at both supports: each branch
// integrates to the same as the corresponding middle span, with sign.
TEST(Extension, ReflectedSlopeIntegratesToZeroOverEachSpan) {
    for (double v : {0.0, 0.3, 0.7}) {
        const auto c = derive_constants(kPi, v);
        const auto d = sine_tenth();
        const ExtensionField f(d, c, FieldKind::slope);
        auto branch = [&](ExtensionBranch b) { return [&f, b](double x) { return f.branch_value(b, x); }; };
        const double left = integrate(branch(ExtensionBranch::left), -c.l1, 0.0, 512);
        const double mid = integrate(branch(ExtensionBranch::middle), 0.0, kPi, 512);
        const double right = integrate(branch(ExtensionBranch::right), kPi, c.l2, 512);
        EXPECT_NEAR(mid, 0.0, 1e-12) << "v=" << v;   // phi0(L) - phi0(0)
        EXPECT_NEAR(left, 0.0, 1e-12) << "v=" << v;  // phi~(0) - phi~(-L1)
        EXPECT_NEAR(right, 0.0, 1e-12) << "v=" << v;
    }
}

TEST(Extension, MappedBreakpointsLandOnDataKnotImages) {
    const auto c = derive_constants(2.0, 0.5);
    const auto d = InitialData::bump(2.0, 1.0, 0.8, 1.0);
    const ExtensionField f(d, c, FieldKind::slope);
    for (auto b : {ExtensionBranch::left, ExtensionBranch::right}) {
        for (double y : f.mapped_breakpoints(b)) {
            const double s = f.source_point(b, y);
            bool hit = false;
            for (double k : d.breakpoints()) hit = hit || std::abs(k - s) < 1e-12;
            EXPECT_TRUE(hit) << "image " << y << " maps to " << s;
        }
    }
}

}  // namespace
