#pragma once

// Quasi-probabilities for two incompatible Alice settings (alpha, alpha')
// and one Bob setting beta, measured on the singlet. Indices j, k, l are
// outcome indices (0 for +1, 1 for -1) of X(alpha), X(alpha'), Y(beta).

#include <array>
#include <cstddef>
#include <vector>

#include "bellcheck/born.hpp"
#include "bellcheck/polarization.hpp"

namespace bellcheck {

/// C(alpha, beta) + C(alpha', beta). Evaluated as the operator sandwich
/// <Psi|[X(alpha) + X(alpha')] Y(beta)|Psi> and as the sum of two joint-PMF
/// correlations; InternalError if they differ by more than 1e-12.
double q_value(Angle alpha, Angle alpha_prime, Angle beta);

class QuasiPmf3 {
  public:
    QuasiPmf3(const std::array<double, 8>& values, Angle alpha, Angle alpha_prime, Angle beta);

    double operator()(int j, int k, int l) const { return values_[(j * 2 + k) * 2 + l]; }
    const std::array<double, 8>& values() const { return values_; }
    Angle alpha() const { return alpha_; }
    Angle alpha_prime() const { return alpha_prime_; }
    Angle beta() const { return beta_; }

    double min_value() const;

  private:
    std::array<double, 8> values_;
    Angle alpha_, alpha_prime_, beta_;
};

/// F_jkl = <Psi|x_j,a; y_l,b> <x_j,a|x_k,a'> <x_k,a'; y_l,b|Psi>. The
/// product is formed in complex arithmetic; InternalError if an imaginary
/// part exceeds 1e-12. Entries may be negative.
QuasiPmf3 f_jkl(Angle alpha, Angle alpha_prime, Angle beta);

/// Deviations of the three marginal identities from exact equality.
struct MarginalResiduals {
    double total = 0.0;           // |sum_jkl F - 1|
    double sum_over_j = 0.0;      // max_kl |sum_j F_jkl - P_kl(alpha', beta)|
    double sum_over_k = 0.0;      // max_jl |sum_k F_jkl - P_jl(alpha, beta)|
};
MarginalResiduals marginal_residuals(const QuasiPmf3& f);

/// sum_jkl (x_j + x_k) y_l F_jkl
double q_reconstruct(Angle alpha, Angle alpha_prime, Angle beta);

class QuasiPmf2 {
  public:
    QuasiPmf2(const std::array<double, 4>& values, Angle alpha, Angle alpha_prime);

    double operator()(int j, int k) const { return values_[j * 2 + k]; }
    double row_sum(int j) const { return values_[j * 2] + values_[j * 2 + 1]; }
    double column_sum(int k) const { return values_[k] + values_[2 + k]; }
    double min_value() const;

  private:
    std::array<double, 4> values_;
    Angle alpha_, alpha_prime_;
};

/// F_jk = sum_l F_jkl, which does not depend on beta. Evaluated at ten
/// seeded beta values; InternalError if they differ by more than 1e-12.
QuasiPmf2 f_jk(Angle alpha, Angle alpha_prime);

struct NegativityWitness {
    double alpha_deg = 0.0;
    double alpha_prime_deg = 0.0;
    double beta_deg = 0.0;
    int j = 0;
    int k = 0;
    int l = 0;
    double value = 0.0;
};

/// Every cell with F_jkl < -1e-12 on the grid {0, step, 2 step, ...} below
/// 180 degrees, for each of the three angles. Sorted by value, then
/// lexicographically by (alpha, alpha', beta, j, k, l). ValidationError
/// unless step > 0.
std::vector<NegativityWitness> find_negativity(Angle step, std::size_t workers = 1);

}  // namespace bellcheck
