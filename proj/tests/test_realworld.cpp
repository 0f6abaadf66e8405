#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "bellcheck/born.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/realworld.hpp"
#include "test_support.hpp"

using namespace bellcheck;
using bellcheck::testing::Gen;

namespace {

// Statistic histogram counted with eight plain nested loops over the values.
std::map<int, int> brute_force_histogram() {
    std::map<int, int> h;
    const int v[2] = {1, -1};
    for (int x1 : v)
        for (int y1 : v)
            for (int x2 : v)
                for (int y2 : v)
                    for (int x3 : v)
                        for (int y3 : v)
                            for (int x4 : v)
                                for (int y4 : v) ++h[x1 * y1 + x2 * y2 + x3 * y3 - x4 * y4];
    return h;
}

ComplexMatrix projector(Angle phi, int outcome_index) {
    const auto v = port_state(phi, outcome_index);
    return outer(v, v);
}

}  // namespace

TEST(RunRecordTest, StatisticFormula) {
    RunRecord r;
    r.outcomes = {{{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, -1}}};
    EXPECT_EQ(r.statistic(), 4);
    r.outcomes = {{{1, 1, -1}, {2, 1, -1}, {3, -1, 1}, {4, 1, 1}}};
    EXPECT_EQ(r.statistic(), -4);
}

TEST(TotalSampleSpaceTest, SizeOrderAndHistogram) {
    const auto runs = enumerate_total_sample_space();
    ASSERT_EQ(runs.size(), 256u);
    std::map<int, int> h;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        EXPECT_EQ(outcome_index(runs[i]), i);
        EXPECT_EQ(outcome_index(run_from_index(i)), i);
        for (int e = 0; e < 4; ++e) EXPECT_EQ(runs[i].outcomes[e].experiment, e + 1);
        ++h[runs[i].statistic()];
    }
    EXPECT_EQ(h, brute_force_histogram());
    const std::map<int, int> expected{{-4, 16}, {-2, 64}, {0, 96}, {2, 64}, {4, 16}};
    EXPECT_EQ(h, expected);
    EXPECT_THROW(run_from_index(256), ValidationError);
}

TEST(ExperimentSettingsTest, Pairing) {
    const auto cfg = AngleConfig::from_degrees(1, 2, 3, 4);
    const auto s = experiment_settings(cfg);
    EXPECT_DOUBLE_EQ(s[0].alice.degrees(), 1.0);
    EXPECT_DOUBLE_EQ(s[0].bob.degrees(), 3.0);
    EXPECT_DOUBLE_EQ(s[1].alice.degrees(), 1.0);
    EXPECT_DOUBLE_EQ(s[1].bob.degrees(), 4.0);
    EXPECT_DOUBLE_EQ(s[2].alice.degrees(), 2.0);
    EXPECT_DOUBLE_EQ(s[2].bob.degrees(), 3.0);
    EXPECT_DOUBLE_EQ(s[3].alice.degrees(), 2.0);
    EXPECT_DOUBLE_EQ(s[3].bob.degrees(), 4.0);
}

TEST(PairSamplerTest, InverseCdfBoundaries) {
    const PairSampler s(JointPmf2x2({{{0.1, 0.2}, {0.3, 0.4}}}));
    EXPECT_EQ(s.draw(0.0), std::make_pair(1, 1));
    EXPECT_EQ(s.draw(0.099), std::make_pair(1, 1));
    EXPECT_EQ(s.draw(0.101), std::make_pair(1, -1));
    EXPECT_EQ(s.draw(0.299), std::make_pair(1, -1));
    EXPECT_EQ(s.draw(0.301), std::make_pair(-1, 1));
    EXPECT_EQ(s.draw(0.601), std::make_pair(-1, -1));
    EXPECT_EQ(s.draw(0.9999999), std::make_pair(-1, -1));
}

TEST(PairSamplerTest, ZeroMassCellsAreNeverDrawn) {
    const PairSampler s(Angle(0.4), Angle(0.4));
    const CounterStream stream(99);
    for (std::uint64_t i = 0; i < 20000; ++i) {
        const auto [x, y] = s.draw(stream.uniform(i));
        EXPECT_EQ(x * y, -1);
    }
}

TEST(CounterStreamTest, UniformRangeAndIndependentKeys) {
    const CounterStream a(derive_stream_key(5, 1)), b(derive_stream_key(5, 2));
    int equal = 0;
    double sum = 0.0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const double u = a.uniform(i);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        if (a.bits(i) == b.bits(i)) ++equal;
    }
    EXPECT_EQ(equal, 0);
    EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}

TEST(RunExperimentsTest, ValidationErrors) {
    const auto cfg = AngleConfig::from_degrees(0, 45, 22.5, -22.5);
    EXPECT_THROW(run_experiments(cfg, 0, 1), ValidationError);
    EXPECT_THROW(run_experiments(cfg, 10, 1, 0), ValidationError);
    EXPECT_THROW(experiment_stream(1, 0), ValidationError);
    EXPECT_THROW(experiment_stream(1, 5), ValidationError);
}

TEST(RunExperimentsTest, IdenticalAcrossShardsAndWorkers) {
    Gen gen(41);
    for (int trial = 0; trial < 5; ++trial) {
        const auto cfg = gen.config();
        const std::uint64_t n = 10007 + static_cast<std::uint64_t>(trial) * 13;
        const auto base = run_experiments(cfg, n, 1234 + trial, 1, 1);
        for (auto [shards, workers] : {std::pair<std::size_t, std::size_t>{8, 1}, {8, 4}, {3, 2}, {64, 3}}) {
            const auto r = run_experiments(cfg, n, 1234 + trial, shards, workers);
            for (int e = 0; e < 4; ++e) {
                EXPECT_EQ(r.correlations[e].mean, base.correlations[e].mean);
                EXPECT_EQ(r.correlations[e].std_error, base.correlations[e].std_error);
            }
            EXPECT_EQ(r.e_rw.mean, base.e_rw.mean);
            EXPECT_EQ(r.e_rw.std_error, base.e_rw.std_error);
        }
    }
}

TEST(RunExperimentsTest, SampleRunsMatchEstimates) {
    const auto cfg = AngleConfig::from_degrees(0, 45, 22.5, -22.5);
    const std::uint64_t n = 5000;
    const auto runs = sample_runs(cfg, n, 77);
    const auto r = run_experiments(cfg, n, 77);
    ASSERT_EQ(runs.size(), n);
    double stat_sum = 0.0;
    for (int e = 0; e < 4; ++e) {
        long sum = 0;
        for (const auto& run : runs) sum += run.outcomes[e].x * run.outcomes[e].y;
        EXPECT_NEAR(r.correlations[e].mean, static_cast<double>(sum) / n, 1e-15);
    }
    for (const auto& run : runs) {
        EXPECT_LE(std::abs(run.statistic()), 4);
        stat_sum += run.statistic();
    }
    EXPECT_NEAR(r.e_rw.mean, stat_sum / n, 1e-12);
}

TEST(RunExperimentsTest, EstimatesWithinFiveStandardErrors) {
    Gen gen(42);
    for (int trial = 0; trial < 5; ++trial) {
        const auto cfg = gen.config();
        const auto r = run_experiments(cfg, 200000, 900 + trial);
        const auto s = experiment_settings(cfg);
        for (int e = 0; e < 4; ++e) {
            const double expected = -std::cos(2.0 * (s[e].alice.radians() - s[e].bob.radians()));
            // Population standard error; the sample one can be 0 when the
            // correlation is within a few 1e-6 of +-1.
            const double sigma = std::sqrt((1.0 - expected * expected) / 200000.0);
            EXPECT_LE(std::abs(r.correlations[e].mean - expected), 5.0 * sigma + 1e-12);
        }
    }
}

TEST(TensorStateTest, IsFourfoldSinglet) {
    const auto psi = singlet_state();
    const auto expected = kron(kron(kron(psi, psi), psi), psi);
    const auto t = tensor_state_T();
    ASSERT_EQ(t.dim(), 256u);
    EXPECT_LE(max_abs_diff(t, expected), 0.0);
    EXPECT_NEAR(t.norm(), 1.0, 1e-14);
}

TEST(JointPmfTTest, BornRouteMatchesExplicitProjector) {
    const auto cfg = AngleConfig::from_degrees(0, 45, 22.5, -22.5);
    const auto settings = experiment_settings(cfg);
    const auto psi_t = tensor_state_T();
    const auto born = joint_pmf_T_born(cfg);
    for (std::size_t index : {0u, 5u, 77u, 128u, 200u, 255u}) {
        const auto run = run_from_index(index);
        ComplexMatrix p = ComplexMatrix::identity(1);
        for (int e = 0; e < 4; ++e) {
            p = kron(p, projector(settings[e].alice, run.outcomes[e].x == 1 ? 0 : 1));
            p = kron(p, projector(settings[e].bob, run.outcomes[e].y == 1 ? 0 : 1));
        }
        ASSERT_EQ(p.rows(), 256u);
        EXPECT_NEAR(expectation(psi_t, p).real(), born[index], 1e-14) << "outcome " << index;
    }
}

TEST(JointPmfTTest, FactorizesIntoPairPmfs) {
    Gen gen(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto cfg = gen.config();
        const auto pmf = joint_pmf_T(cfg);
        const auto s = experiment_settings(cfg);
        EXPECT_NEAR(pmf.sum(), 1.0, 1e-12);
        for (std::size_t i = 0; i < 256; i += 17) {
            const auto run = run_from_index(i);
            double product = 1.0;
            for (int e = 0; e < 4; ++e) {
                const auto pair = joint_pmf(singlet_state(), s[e].alice, s[e].bob);
                product *= pair(run.outcomes[e].x == 1 ? 0 : 1, run.outcomes[e].y == 1 ? 0 : 1);
            }
            EXPECT_NEAR(pmf[i], product, 1e-12);
            EXPECT_DOUBLE_EQ(pmf.probability(run), pmf[i]);
        }
        EXPECT_NEAR(e_qm_T(cfg), e_qm(cfg), 1e-12);
    }
}

TEST(JointPmfTTest, ExpectationNearCoincidentSettingsMatchesClosedForm) {
    const double eps = 1e-3;
    const auto cfg = AngleConfig::from_degrees(0, 45, eps, 90);
    const double r = eps * std::numbers::pi / 180.0;
    const double closed = -std::cos(2 * r) - std::cos(std::numbers::pi) - std::cos(2 * (std::numbers::pi / 4 - r)) +
                          std::cos(2 * (std::numbers::pi / 4 - std::numbers::pi / 2));
    EXPECT_NEAR(e_qm_T(cfg), closed, 1e-12);
}

TEST(Pmf8Test, Validation) {
    std::array<double, 256> p{};
    EXPECT_THROW(Pmf8{p}, ValidationError);
    p[3] = 1.0;
    EXPECT_NO_THROW(Pmf8{p});
    p[4] = -0.5;
    p[5] = 0.5;
    EXPECT_THROW(Pmf8{p}, ValidationError);
}
