#include "bellcheck/counterfactual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellcheck/errors.hpp"
#include "bellcheck/simplex.hpp"

namespace bellcheck {
namespace {

constexpr double kMarginalConsistencyTol = 1e-10;
constexpr double kChshClassicalBound = 2.0;
constexpr double kChshCriterionSlack = 1e-9;
constexpr double kWitnessResidualTol = 1e-9;

int index_value(int index_1_based) { return index_1_based == 1 ? 1 : -1; }
int value_index(int value) { return value > 0 ? 1 : 2; }

void require_range(const CfOutcome& w) {
    for (int v : {w.k, w.l, w.m, w.n}) {
        if (v != 1 && v != 2) throw ValidationError("counterfactual outcome index must be 1 or 2");
    }
}

void require_same(const Pmf2& a, const Pmf2& b, const char* which) {
    if (std::abs(a.p_plus - b.p_plus) > kMarginalConsistencyTol ||
        std::abs(a.p_minus - b.p_minus) > kMarginalConsistencyTol) {
        throw ValidationError(std::string("inconsistent one-party marginal for ") + which);
    }
}

// Outcome index (0 for +1, 1 for -1) of each variable in the 16-outcome
// ordering: variable 0 = A1, 1 = A2, 2 = B1, 3 = B2.
int variable_index(std::size_t omega, int variable) { return static_cast<int>((omega >> (3 - variable)) & 1u); }

// Variables (A, B) of the four measured pairs in PairMarginals order.
constexpr std::array<std::array<int, 2>, 4> kPairVariables{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};

}  // namespace

std::vector<CfOutcome> cf_sample_space() {
    std::vector<CfOutcome> out;
    out.reserve(16);
    for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
            for (int m = 1; m <= 2; ++m) {
                for (int n = 1; n <= 2; ++n) out.push_back({k, l, m, n});
            }
        }
    }
    return out;
}

DichotomicValues cf_values(const CfOutcome& omega) {
    require_range(omega);
    return {index_value(omega.k), index_value(omega.l), index_value(omega.m), index_value(omega.n)};
}

CfOutcome cf_outcome_of(const DichotomicValues& v) {
    return {value_index(v.a1), value_index(v.a2), value_index(v.b1), value_index(v.b2)};
}

int cf_statistic(const CfOutcome& omega) {
    const auto v = cf_values(omega);
    return (v.a1 + v.a2) * v.b1 + (v.a1 - v.a2) * v.b2;
}

std::size_t cf_index(const CfOutcome& omega) {
    require_range(omega);
    return static_cast<std::size_t>((omega.k - 1) * 8 + (omega.l - 1) * 4 + (omega.m - 1) * 2 + (omega.n - 1));
}

CfPmf::CfPmf(const std::array<double, 16>& p) : p_(p) {
    double sum = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) throw ValidationError("CfPmf entry is negative or NaN");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("CfPmf does not sum to 1");
}

CfPmf CfPmf::point_mass(const CfOutcome& omega) {
    std::array<double, 16> p{};
    p[cf_index(omega)] = 1.0;
    return CfPmf(p);
}

CfPmf CfPmf::uniform() {
    std::array<double, 16> p;
    p.fill(1.0 / 16.0);
    return CfPmf(p);
}

double CfPmf::probability(const CfOutcome& omega) const { return p_[cf_index(omega)]; }

double e_hv(const CfPmf& pmf) {
    double e = 0.0;
    const auto space = cf_sample_space();
    for (std::size_t i = 0; i < space.size(); ++i) e += pmf[i] * cf_statistic(space[i]);
    return e;
}

std::optional<DichotomicValues> identify(const RunRecord& run) {
    const auto& o = run.outcomes;
    if (o[0].x != o[1].x || o[2].x != o[3].x || o[0].y != o[2].y || o[1].y != o[3].y) return std::nullopt;
    return DichotomicValues{o[0].x, o[2].x, o[0].y, o[1].y};
}

double chsh_all_variants(double c11, double c12, double c21, double c22) {
    const std::array<double, 4> c{c11, c12, c21, c22};
    for (double v : c) {
        if (!(std::abs(v) <= 1.0 + 1e-12)) throw ValidationError("correlation outside [-1, 1]");
    }
    const double total = c11 + c12 + c21 + c22;
    double best = 0.0;
    for (double v : c) best = std::max(best, std::abs(total - 2.0 * v));
    return best;
}

PairMarginals::PairMarginals(const JointPmf2x2& a1b1, const JointPmf2x2& a1b2, const JointPmf2x2& a2b1,
                             const JointPmf2x2& a2b2)
    : pairs_{a1b1, a1b2, a2b1, a2b2} {
    require_same(a1b1.row_marginal(), a1b2.row_marginal(), "A1");
    require_same(a2b1.row_marginal(), a2b2.row_marginal(), "A2");
    require_same(a1b1.column_marginal(), a2b1.column_marginal(), "B1");
    require_same(a1b2.column_marginal(), a2b2.column_marginal(), "B2");
}

std::array<double, 4> PairMarginals::correlations() const {
    return {pairs_[0].correlation(), pairs_[1].correlation(), pairs_[2].correlation(), pairs_[3].correlation()};
}

PairMarginals push_forward(const CfPmf& pmf) {
    std::array<std::array<std::array<double, 2>, 2>, 4> cells{};
    for (std::size_t w = 0; w < 16; ++w) {
        for (std::size_t pair = 0; pair < 4; ++pair) {
            const int s = variable_index(w, kPairVariables[pair][0]);
            const int t = variable_index(w, kPairVariables[pair][1]);
            cells[pair][s][t] += pmf[w];
        }
    }
    return PairMarginals(JointPmf2x2(cells[0]), JointPmf2x2(cells[1]), JointPmf2x2(cells[2]),
                         JointPmf2x2(cells[3]));
}

PairMarginals quantum_marginals(const AngleConfig& cfg) {
    const auto psi = singlet_state();
    return PairMarginals(joint_pmf(psi, cfg.alpha1(), cfg.beta1()), joint_pmf(psi, cfg.alpha1(), cfg.beta2()),
                         joint_pmf(psi, cfg.alpha2(), cfg.beta1()), joint_pmf(psi, cfg.alpha2(), cfg.beta2()));
}

FeasibilityVerdict fine_feasibility(const PairMarginals& marginals) {
    // One equality per (pair, cell): the weights of the outcomes that show
    // that cell must add up to the measured probability.
    constexpr std::size_t kRows = 16;
    constexpr std::size_t kCols = 16;
    std::vector<double> a(kRows * kCols, 0.0);
    std::vector<double> b(kRows, 0.0);
    for (std::size_t pair = 0; pair < 4; ++pair) {
        for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
                const std::size_t row = pair * 4 + static_cast<std::size_t>(s * 2 + t);
                b[row] = marginals.pairs()[pair](s, t);
                for (std::size_t w = 0; w < kCols; ++w) {
                    if (variable_index(w, kPairVariables[pair][0]) == s &&
                        variable_index(w, kPairVariables[pair][1]) == t) {
                        a[row * kCols + w] = 1.0;
                    }
                }
            }
        }
    }
    const auto lp_result = lp::phase_one(a, b, kRows, kCols);

    FeasibilityVerdict verdict;
    const auto c = marginals.correlations();
    verdict.chsh_variants = chsh_all_variants(c[0], c[1], c[2], c[3]);
    verdict.feasible = lp_result.feasible;
    verdict.infeasibility = lp_result.infeasibility;

    const bool chsh_feasible = verdict.chsh_variants <= kChshClassicalBound + kChshCriterionSlack;
    if (chsh_feasible != verdict.feasible) {
        throw InternalError("feasibility verdict (" + std::to_string(verdict.feasible) +
                            ") disagrees with CHSH criterion, chsh = " + std::to_string(verdict.chsh_variants));
    }

    if (verdict.feasible) {
        std::array<double, 16> w{};
        double total = 0.0;
        for (std::size_t i = 0; i < 16; ++i) {
            w[i] = clamp_probability(lp_result.x[i]);
            total += w[i];
        }
        for (double& v : w) v /= total;
        CfPmf witness(w);
        const auto pushed = push_forward(witness);
        double residual = 0.0;
        for (std::size_t pair = 0; pair < 4; ++pair) {
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) {
                    residual =
                        std::max(residual, std::abs(pushed.pairs()[pair](s, t) - marginals.pairs()[pair](s, t)));
                }
            }
        }
        if (residual > kWitnessResidualTol) {
            throw InternalError("feasibility witness misses the marginals by " + std::to_string(residual));
        }
        verdict.witness = witness;
        verdict.witness_residual = residual;
    }
    return verdict;
}

}  // namespace bellcheck
