#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bellcheck/born.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/quasiprob.hpp"
#include "test_support.hpp"

using namespace bellcheck;

namespace {

Angle deg(double d) { return Angle::from_degrees(d); }

// F_111 at (0, 60, 30) written out by hand from the real amplitudes:
// <x_1,0; y_1,30|Psi> = sin(30)/sqrt2, <x_1,0|x_1,60> = cos(60),
// <x_1,60; y_1,30|Psi> = sin(-30)/sqrt2.
double hand_f111() {
    const double r = std::numbers::pi / 180.0;
    return (std::sin(30 * r) / std::numbers::sqrt2) * std::cos(60 * r) * (std::sin(-30 * r) / std::numbers::sqrt2);
}

}  // namespace

TEST(QValueTest, Examples) {
    EXPECT_NEAR(q_value(deg(0), deg(60), deg(30)), -1.0, 1e-12);
    EXPECT_NEAR(q_value(deg(17), deg(17), deg(17)), -2.0, 1e-12);
    EXPECT_NEAR(q_value(deg(0), deg(90), deg(45)), 0.0, 1e-12);
}

TEST(FjklTest, NegativeCellAtSixtyThirty) {
    const auto f = f_jkl(deg(0), deg(60), deg(30));
    EXPECT_NEAR(hand_f111(), -0.0625, 1e-15);
    EXPECT_NEAR(f(0, 0, 0), hand_f111(), 1e-12);
    EXPECT_NEAR(f.min_value(), -0.0625, 1e-12);
}

TEST(FjklTest, EqualAlicesGiveTheJointPmf) {
    const auto f = f_jkl(deg(20), deg(20), deg(70));
    const auto p = joint_pmf(singlet_state(), deg(20), deg(70));
    for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
            EXPECT_NEAR(f(j, j, l), p(j, l), 1e-12);
            EXPECT_NEAR(f(j, 1 - j, l), 0.0, 1e-12);
        }
    }
}

TEST(FjklTest, SumsToOne) {
    const auto f = f_jkl(deg(0), deg(45), deg(22.5));
    double total = 0.0;
    for (double v : f.values()) total += v;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_LT(f.min_value(), -1e-12);
}

TEST(FjklTest, MarginalIdentitiesAndReconstructionOnFiveDegreeGrid) {
    double worst_marginal = 0.0, worst_q = 0.0;
    for (int a = 0; a < 180; a += 5) {
        for (int ap = 0; ap < 180; ap += 5) {
            for (int b = 0; b < 180; b += 5) {
                const auto f = f_jkl(deg(a), deg(ap), deg(b));
                const auto r = marginal_residuals(f);
                worst_marginal = std::max({worst_marginal, r.total, r.sum_over_j, r.sum_over_k});
                worst_q = std::max(worst_q, std::abs(q_reconstruct(deg(a), deg(ap), deg(b)) - q_value(deg(a), deg(ap), deg(b))));
            }
        }
    }
    EXPECT_LE(worst_marginal, 1e-12);
    EXPECT_LE(worst_q, 1e-12);
}

TEST(QReconstructTest, Examples) {
    EXPECT_NEAR(q_reconstruct(deg(0), deg(60), deg(30)), -1.0, 1e-12);
    for (double a : {0.0, 10.0, 33.0, 80.0}) {
        EXPECT_NEAR(q_reconstruct(deg(a), deg(a), deg(0)), -2.0 * std::cos(2.0 * a * std::numbers::pi / 180), 1e-12);
    }
}

TEST(FjkTest, Examples) {
    const auto same = f_jk(deg(25), deg(25));
    EXPECT_NEAR(same(0, 0), 0.5, 1e-12);
    EXPECT_NEAR(same(1, 1), 0.5, 1e-12);
    EXPECT_NEAR(same(0, 1), 0.0, 1e-12);
    const auto quarter = f_jk(deg(0), deg(45));
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) EXPECT_NEAR(quarter(j, k), 0.25, 1e-12);
}

TEST(FjkTest, MarginalsAreHalfAndEntriesAreNonnegative) {
    // The two-index function reduces to |<x_j,a|x_k,a'>|^2 / 2 for these
    // real bases, so it never goes negative.
    for (int a = 0; a < 180; a += 5) {
        for (int ap = 0; ap < 180; ap += 5) {
            const auto f = f_jk(deg(a), deg(ap));
            for (int i = 0; i < 2; ++i) {
                EXPECT_NEAR(f.row_sum(i), 0.5, 1e-12);
                EXPECT_NEAR(f.column_sum(i), 0.5, 1e-12);
            }
            const double overlap = std::cos((a - ap) * std::numbers::pi / 180);
            EXPECT_NEAR(f(0, 0), 0.5 * overlap * overlap, 1e-12);
            EXPECT_GE(f.min_value(), -1e-12);
        }
    }
}

TEST(FindNegativityTest, FifteenDegreeGrid) {
    const auto found = find_negativity(deg(15));
    ASSERT_FALSE(found.empty());
    EXPECT_LE(found.front().value, -0.06);
    for (std::size_t i = 1; i < found.size(); ++i) EXPECT_LE(found[i - 1].value, found[i].value);
    bool saw_example = false;
    for (const auto& w : found) {
        EXPECT_LT(w.value, -1e-12);
        EXPECT_NE(w.alpha_deg, w.alpha_prime_deg);
        if (std::abs(w.alpha_deg) < 1e-9 && std::abs(w.alpha_prime_deg - 60) < 1e-9 && std::abs(w.beta_deg - 30) < 1e-9 &&
            w.j == 0 && w.k == 0 && w.l == 0) {
            saw_example = true;
            EXPECT_NEAR(w.value, -0.0625, 1e-12);
        }
    }
    EXPECT_TRUE(saw_example);
}

TEST(FindNegativityTest, WorkerCountDoesNotChangeResult) {
    const auto a = find_negativity(deg(30), 1);
    const auto b = find_negativity(deg(30), 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].value, b[i].value);
        EXPECT_EQ(a[i].alpha_deg, b[i].alpha_deg);
        EXPECT_EQ(a[i].beta_deg, b[i].beta_deg);
    }
}

TEST(FindNegativityTest, RejectsNonPositiveStep) {
    EXPECT_THROW(find_negativity(deg(0)), ValidationError);
    EXPECT_THROW(find_negativity(deg(-5)), ValidationError);
}
