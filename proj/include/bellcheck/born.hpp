#pragma once

// Born-rule probabilities for dichotomic polarization observables.
//
// Outcome index convention, shared by every module: index 0 is the value +1
// (polarizer port 1), index 1 is the value -1 (port 2).

#include <array>

#include "bellcheck/linalg.hpp"
#include "bellcheck/polarization.hpp"

namespace bellcheck {

/// Value (+1 or -1) carried by outcome index 0 or 1.
constexpr int outcome_value(int index) { return index == 0 ? 1 : -1; }

/// Maps a raw Born probability onto [0, 1]. Values in [-1e-12, 0) are
/// rounding noise and become 0; anything more negative throws InternalError.
double clamp_probability(double p);

struct Pmf2 {
    double p_plus = 0.0;
    double p_minus = 0.0;

    double expectation() const { return p_plus - p_minus; }
};

class JointPmf2x2 {
  public:
    /// p[k][l] is the probability of (x_k, y_l). Entries must be
    /// nonnegative and sum to 1 within 1e-12 (ValidationError otherwise).
    explicit JointPmf2x2(const std::array<std::array<double, 2>, 2>& p);

    double operator()(int k, int l) const { return p_[k][l]; }

    /// Marginal of the first (Alice) variable.
    Pmf2 row_marginal() const;
    /// Marginal of the second (Bob) variable.
    Pmf2 column_marginal() const;
    /// sum_kl x_k y_l P_kl
    double correlation() const;

  private:
    std::array<std::array<double, 2>, 2> p_;
};

/// Distribution of a +-1 observable in a pure two-photon state, via the
/// spectral projectors (I +- O)/2. Throws ValidationError for a non-unit
/// state or an observable that is not Hermitian and involutory.
Pmf2 pmf_single(const ComplexVector& state, const ComplexMatrix& observable);

/// P_kl = |<x_k, alpha; y_l, beta | state>|^2.
JointPmf2x2 joint_pmf(const ComplexVector& state, Angle alpha, Angle beta);

/// Singlet correlation E[XY], evaluated from the joint PMF.
double correlation(Angle alpha, Angle beta);

/// Singlet correlation evaluated as the operator sandwich <Psi|X(alpha)Y(beta)|Psi>.
double correlation_operator(Angle alpha, Angle beta);

/// C(a1,b1) + C(a1,b2) + C(a2,b1) - C(a2,b2) for the singlet.
double e_qm(const AngleConfig& cfg);

}  // namespace bellcheck
