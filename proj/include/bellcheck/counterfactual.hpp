#pragma once

// The counterfactual device: one photon pair yields all four dichotomic
// values a1, a2, b1, b2 at once, so the sample space has 16 elements
// omega_klmn and A1, A2, B1, B2 are functions on it.

#include <array>
#include <optional>
#include <vector>

#include "bellcheck/born.hpp"
#include "bellcheck/polarization.hpp"
#include "bellcheck/realworld.hpp"

namespace bellcheck {

/// omega_klmn; each index is 1 or 2 (port exit p_n1 or p_n2).
struct CfOutcome {
    int k = 1;
    int l = 1;
    int m = 1;
    int n = 1;

    friend bool operator==(const CfOutcome&, const CfOutcome&) = default;
};

struct DichotomicValues {
    int a1 = 1;
    int a2 = 1;
    int b1 = 1;
    int b2 = 1;

    friend bool operator==(const DichotomicValues&, const DichotomicValues&) = default;
};

/// The 16 outcomes with k most significant.
std::vector<CfOutcome> cf_sample_space();

/// A1 = (-1)^(k+1), A2 = (-1)^(l+1), B1 = (-1)^(m+1), B2 = (-1)^(n+1).
DichotomicValues cf_values(const CfOutcome& omega);
CfOutcome cf_outcome_of(const DichotomicValues& values);

/// (a1 + a2) b1 + (a1 - a2) b2, which is always +2 or -2.
int cf_statistic(const CfOutcome& omega);

/// Distribution over the 16 counterfactual outcomes, i.e. a joint
/// distribution of (A1, A2, B1, B2).
class CfPmf {
  public:
    /// Entries ordered as cf_sample_space(). ValidationError unless all
    /// entries are >= 0 and they sum to 1 within 1e-12.
    explicit CfPmf(const std::array<double, 16>& p);

    static CfPmf point_mass(const CfOutcome& omega);
    static CfPmf uniform();

    double operator[](std::size_t index) const { return p_[index]; }
    double probability(const CfOutcome& omega) const;
    const std::array<double, 16>& values() const { return p_; }

  private:
    std::array<double, 16> p_;
};

std::size_t cf_index(const CfOutcome& omega);

/// E[A1 B1] + E[B1 A2] + E[A1 B2] - E[A2 B2].
double e_hv(const CfPmf& pmf);

/// The counterfactual identification of a real-world run: A1 is the Alice
/// value shared by E1 and E2, A2 by E3 and E4, B1 the Bob value shared by E1
/// and E3, B2 by E2 and E4. Returns the values only when the run is
/// consistent with that identification.
std::optional<DichotomicValues> identify(const RunRecord& run);

/// Largest |c11 + c12 + c21 + c22 - 2 c_i| over the choice of the one
/// negated term, i.e. the maximum over all eight CHSH sign variants.
/// Inputs must lie in [-1, 1].
double chsh_all_variants(double c11, double c12, double c21, double c22);

/// Joint distributions of the four measured pairs (A1,B1), (A1,B2),
/// (A2,B1), (A2,B2). Construction checks that each one-party marginal is
/// the same in both pairs that contain it (within 1e-10).
class PairMarginals {
  public:
    PairMarginals(const JointPmf2x2& a1b1, const JointPmf2x2& a1b2, const JointPmf2x2& a2b1,
                  const JointPmf2x2& a2b2);

    const JointPmf2x2& a1b1() const { return pairs_[0]; }
    const JointPmf2x2& a1b2() const { return pairs_[1]; }
    const JointPmf2x2& a2b1() const { return pairs_[2]; }
    const JointPmf2x2& a2b2() const { return pairs_[3]; }
    const std::array<JointPmf2x2, 4>& pairs() const { return pairs_; }

    /// (E[A1B1], E[A1B2], E[A2B1], E[A2B2])
    std::array<double, 4> correlations() const;

  private:
    std::array<JointPmf2x2, 4> pairs_;
};

/// Pair marginals of a joint distribution over the 16 outcomes.
PairMarginals push_forward(const CfPmf& pmf);

/// Singlet pair distributions at the four CHSH settings.
PairMarginals quantum_marginals(const AngleConfig& cfg);

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<CfPmf> witness;
    double chsh_variants = 0.0;
    /// Phase-one optimum (sum of artificials).
    double infeasibility = 0.0;
    /// Max deviation of the witness's pair marginals from the input.
    double witness_residual = 0.0;
};

/// Decides whether a joint distribution of (A1, A2, B1, B2) reproduces the
/// four pair marginals, by phase-one simplex over the 16 outcome weights.
/// Throws InternalError if the verdict disagrees with the CHSH criterion
/// (feasible iff chsh_all_variants <= 2 + 1e-9) or if a witness misses the
/// marginals by more than 1e-9.
FeasibilityVerdict fine_feasibility(const PairMarginals& marginals);

}  // namespace bellcheck
