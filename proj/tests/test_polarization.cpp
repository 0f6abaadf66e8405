#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bellcheck/born.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/polarization.hpp"
#include "test_support.hpp"

using namespace bellcheck;
using bellcheck::testing::Gen;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

TEST(AngleTest, DegreesRoundTripAndReduction) {
    EXPECT_DOUBLE_EQ(Angle::from_degrees(90).radians(), std::numbers::pi / 2);
    EXPECT_NEAR(Angle::from_degrees(-22.5).reduced().degrees(), 157.5, 1e-12);
    EXPECT_NEAR(Angle::from_degrees(540).reduced().degrees(), 0.0, 1e-12);
    EXPECT_THROW(Angle(NAN), ValidationError);
    EXPECT_THROW(Angle::from_degrees(INFINITY), ValidationError);
}

TEST(AngleTest, SameSettingIsModuloPi) {
    EXPECT_TRUE(same_setting(Angle::from_degrees(10), Angle::from_degrees(190)));
    EXPECT_TRUE(same_setting(Angle::from_degrees(0), Angle::from_degrees(180 - 1e-12)));
    EXPECT_FALSE(same_setting(Angle::from_degrees(0), Angle::from_degrees(90)));
}

TEST(AngleConfigTest, RejectsEqualSettings) {
    EXPECT_THROW(AngleConfig::from_degrees(10, 10, 0, 45), ValidationError);
    EXPECT_THROW(AngleConfig::from_degrees(0, 45, 30, 30), ValidationError);
    EXPECT_THROW(AngleConfig::from_degrees(0, 180, 0, 45), ValidationError);
    EXPECT_NO_THROW(AngleConfig::from_degrees(0, 45, 22.5, -22.5));
}

TEST(SingletTest, Amplitudes) {
    const auto psi = singlet_state();
    EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
    EXPECT_NEAR(psi[1].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(psi[2].real(), -kInvSqrt2, 1e-15);
    EXPECT_EQ(inner(psi, ComplexVector::basis(4, 0)), Complex(0.0));
    EXPECT_EQ(inner(psi, ComplexVector::basis(4, 3)), Complex(0.0));
}

TEST(RotatedBasisTest, Examples) {
    const auto b0 = rotated_basis(Angle(0.0));
    EXPECT_LE(max_abs_diff(b0.plus, ComplexVector{1.0, 0.0}), 0.0);
    EXPECT_LE(max_abs_diff(b0.minus, ComplexVector{0.0, 1.0}), 0.0);
    const auto b90 = rotated_basis(Angle::from_degrees(90));
    EXPECT_LE(max_abs_diff(b90.plus, ComplexVector{0.0, 1.0}), 1e-15);
    EXPECT_LE(max_abs_diff(b90.minus, ComplexVector{-1.0, 0.0}), 1e-15);
}

TEST(RotatedBasisTest, OrthonormalAndComplete) {
    Gen gen(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto b = rotated_basis(gen.angle());
        EXPECT_NEAR(std::abs(inner(b.plus, b.minus)), 0.0, 1e-15);
        EXPECT_NEAR(b.plus.norm(), 1.0, 1e-15);
        EXPECT_NEAR(b.minus.norm(), 1.0, 1e-15);
        EXPECT_LE(max_abs_diff(outer(b.plus, b.plus) + outer(b.minus, b.minus), ComplexMatrix::identity(2)), 1e-14);
    }
}

TEST(ZOperatorTest, Examples) {
    const std::vector<double> d{1.0, -1.0};
    EXPECT_LE(max_abs_diff(z_operator(Angle(0.0)), ComplexMatrix::diagonal(d)), 0.0);
    EXPECT_LE(max_abs_diff(z_operator(Angle::from_degrees(45)), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), 1e-15);
}

TEST(ZOperatorTest, HermitianInvolutoryAndPiPeriodic) {
    Gen gen(22);
    for (int trial = 0; trial < 500; ++trial) {
        const Angle phi = gen.angle();
        const auto z = z_operator(phi);
        EXPECT_TRUE(is_hermitian(z, 1e-15));
        EXPECT_LE(max_abs_diff(z * z, ComplexMatrix::identity(2)), 1e-14);
        EXPECT_LE(max_abs_diff(z, z_operator(phi + Angle(std::numbers::pi))), 1e-12);
    }
}

TEST(ZOperatorTest, CommutatorClosedFormOnDegreeGrid) {
    const auto sy = pauli_y();
    double worst = 0.0;
    for (int a = 0; a < 180; ++a) {
        for (int b = 0; b < 180; ++b) {
            const Angle phi = Angle::from_degrees(a), phi_p = Angle::from_degrees(b);
            const auto expected = Complex(0.0, -2.0 * std::sin(2.0 * (phi.radians() - phi_p.radians()))) * sy;
            worst = std::max(worst, max_abs_diff(commutator(z_operator(phi), z_operator(phi_p)), expected));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(ObservableTest, XAndYOperators) {
    const std::vector<double> d{1, 1, -1, -1};
    EXPECT_LE(max_abs_diff(x_operator(Angle(0.0)), ComplexMatrix::diagonal(d)), 0.0);
    Gen gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Angle a = gen.angle(), b = gen.angle();
        const auto x = x_operator(a), y = y_operator(b);
        EXPECT_LE(max_abs_diff(x, kron(z_operator(a), ComplexMatrix::identity(2))), 0.0);
        EXPECT_LE(max_abs_diff(y, kron(ComplexMatrix::identity(2), z_operator(b))), 0.0);
        EXPECT_LE(max_abs_diff(x * x, ComplexMatrix::identity(4)), 1e-14);
        EXPECT_LE(frobenius_norm(commutator(x, y)), 1e-13);
    }
}

TEST(ObservableTest, AliceSettingsDoNotCommute) {
    const Angle a = Angle::from_degrees(40);
    const auto c = commutator(x_operator(a), x_operator(a - Angle::from_degrees(30)));
    EXPECT_GE(frobenius_norm(c), 0.1);
}

TEST(SingletTest, JointPmfDependsOnlyOnAngleDifference) {
    Gen gen(24);
    const auto psi = singlet_state();
    for (int trial = 0; trial < 300; ++trial) {
        const Angle a = gen.angle(), b = gen.angle(), shift = gen.angle();
        const auto p = joint_pmf(psi, a, b);
        const auto q = joint_pmf(psi, a + shift, b + shift);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) EXPECT_NEAR(p(k, l), q(k, l), 1e-12);
    }
}
