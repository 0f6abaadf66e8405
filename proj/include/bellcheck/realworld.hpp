#pragma once

// Four independent pair experiments E1..E4, one per CHSH correlation:
// E1 -> (alpha1, beta1), E2 -> (alpha1, beta2), E3 -> (alpha2, beta1),
// E4 -> (alpha2, beta2). Each experiment has its own two-photon system and
// its own pair of random variables (X_n, Y_n).

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bellcheck/born.hpp"
#include "bellcheck/estimator.hpp"
#include "bellcheck/linalg.hpp"
#include "bellcheck/polarization.hpp"
#include "bellcheck/rng.hpp"

namespace bellcheck {

struct ExperimentOutcome {
    int experiment = 1;  // 1..4
    int x = 1;           // +-1
    int y = 1;           // +-1
};

/// One outcome of each of the four experiments.
struct RunRecord {
    std::array<ExperimentOutcome, 4> outcomes;

    /// x1 y1 + x2 y2 + x3 y3 - x4 y4, always in {-4, -2, 0, 2, 4}.
    int statistic() const;
};

struct ExperimentSettings {
    Angle alice;
    Angle bob;
};

std::array<ExperimentSettings, 4> experiment_settings(const AngleConfig& cfg);

/// Inverse-CDF sampler over the four cells of a singlet JointPmf2x2, cells
/// visited in lexicographic (k, l) order.
class PairSampler {
  public:
    PairSampler(Angle alpha, Angle beta);
    explicit PairSampler(const JointPmf2x2& pmf);

    /// (x, y) for a uniform variate u in [0, 1).
    std::pair<int, int> draw(double u) const;

  private:
    std::array<double, 3> cdf_{};
};

/// Draw `index` of a seeded stream, mapped to an outcome pair at (alpha, beta).
std::pair<int, int> sample_pair(Angle alpha, Angle beta, const CounterStream& stream, std::uint64_t index);

/// Stream used by experiment `experiment` (1..4) under a master seed.
CounterStream experiment_stream(std::uint64_t seed, int experiment);

struct SimulationResult {
    std::array<EstimatorResult, 4> correlations;  // C1..C4
    EstimatorResult e_rw;                         // C1 + C2 + C3 - C4
};

/// Monte Carlo of the four experiments, `n` pairs each. Draws are split
/// into `shards` contiguous index ranges executed on up to `workers`
/// threads; the result is bit-identical for every shards/workers choice.
SimulationResult run_experiments(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed,
                                 std::size_t shards = 1, std::size_t workers = 1);

/// Runs 0..n-1, run i combining draw i of each experiment's stream (the same
/// draws run_experiments counts).
std::vector<RunRecord> sample_runs(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed);

/// All 4^4 = 256 combinations of per-experiment elementary events, in
/// lexicographic order with E1 most significant. Within an experiment the
/// events are (+1,+1), (+1,-1), (-1,+1), (-1,-1).
std::vector<RunRecord> enumerate_total_sample_space();

/// Fourfold Kronecker power of the singlet (dimension 256). Factor order is
/// A1 B1 A2 B2 A3 B3 A4 B4, most significant first.
ComplexVector tensor_state_T();

/// Probability mass over the 256 outcomes of (X1, Y1, ..., X4, Y4).
class Pmf8 {
  public:
    explicit Pmf8(const std::array<double, 256>& p);

    double operator[](std::size_t index) const { return p_[index]; }
    double probability(const RunRecord& run) const;
    double sum() const;

  private:
    std::array<double, 256> p_;
};

/// Index of a run in Pmf8 order: bit 7 = X1 ... bit 0 = Y4, bit set for -1.
std::size_t outcome_index(const RunRecord& run);
RunRecord run_from_index(std::size_t index);

/// Born rule in the 256-dimensional space: ||P_r |Psi_T>||^2, with P_r the
/// tensor product of the eight single-photon spectral projectors.
Pmf8 joint_pmf_T_born(const AngleConfig& cfg);
/// Product of the four two-photon JointPmf2x2 values.
Pmf8 joint_pmf_T_factorized(const AngleConfig& cfg);
/// Born route, cross-checked against the factorized route; throws
/// InternalError if any entry differs by more than 1e-12.
Pmf8 joint_pmf_T(const AngleConfig& cfg);

/// Expectation of RunRecord::statistic under joint_pmf_T(cfg).
double e_qm_T(const AngleConfig& cfg);

}  // namespace bellcheck
