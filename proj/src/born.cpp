#include "bellcheck/born.hpp"

#include <cmath>
#include <string>

#include "bellcheck/errors.hpp"

namespace bellcheck {
namespace {

constexpr double kNoiseFloor = 1e-12;

void require_unit(const ComplexVector& state) {
    if (std::abs(state.norm() - 1.0) > kNoiseFloor) throw ValidationError("state vector is not normalized");
}

}  // namespace

double clamp_probability(double p) {
    if (p < -kNoiseFloor) throw InternalError("negative probability " + std::to_string(p));
    if (p < 0.0) return 0.0;
    return p;
}

JointPmf2x2::JointPmf2x2(const std::array<std::array<double, 2>, 2>& p) : p_(p) {
    double sum = 0.0;
    for (const auto& row : p_) {
        for (double v : row) {
            if (!(v >= 0.0) || v > 1.0 + kNoiseFloor) throw ValidationError("joint PMF entry outside [0, 1]");
            sum += v;
        }
    }
    if (std::abs(sum - 1.0) > kNoiseFloor) throw ValidationError("joint PMF does not sum to 1");
}

Pmf2 JointPmf2x2::row_marginal() const { return {p_[0][0] + p_[0][1], p_[1][0] + p_[1][1]}; }

Pmf2 JointPmf2x2::column_marginal() const { return {p_[0][0] + p_[1][0], p_[0][1] + p_[1][1]}; }

double JointPmf2x2::correlation() const {
    double sum = 0.0;
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) sum += outcome_value(k) * outcome_value(l) * p_[k][l];
    }
    return sum;
}

Pmf2 pmf_single(const ComplexVector& state, const ComplexMatrix& observable) {
    require_unit(state);
    if (observable.rows() != state.dim() || !observable.is_square()) {
        throw ValidationError("observable dimension does not match state");
    }
    if (!is_hermitian(observable, kNoiseFloor)) throw ValidationError("observable is not Hermitian");
    const auto id = ComplexMatrix::identity(observable.rows());
    if (max_abs_diff(observable * observable, id) > kNoiseFloor) {
        throw ValidationError("observable is not involutory (spectrum is not {+1, -1})");
    }
    const auto plus = 0.5 * (id + observable);
    const auto minus = 0.5 * (id - observable);
    double p_plus = clamp_probability(expectation(state, plus).real());
    double p_minus = clamp_probability(expectation(state, minus).real());
    const double total = p_plus + p_minus;
    return {p_plus / total, p_minus / total};
}

JointPmf2x2 joint_pmf(const ComplexVector& state, Angle alpha, Angle beta) {
    require_unit(state);
    if (state.dim() != 4) throw ValidationError("joint_pmf expects a two-photon state");
    std::array<std::array<double, 2>, 2> p{};
    double total = 0.0;
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            const auto ket = kron(port_state(alpha, k), port_state(beta, l));
            p[k][l] = clamp_probability(std::norm(inner(ket, state)));
            total += p[k][l];
        }
    }
    for (auto& row : p) {
        for (double& v : row) v /= total;
    }
    return JointPmf2x2(p);
}

double correlation(Angle alpha, Angle beta) { return joint_pmf(singlet_state(), alpha, beta).correlation(); }

double correlation_operator(Angle alpha, Angle beta) {
    return expectation(singlet_state(), x_operator(alpha) * y_operator(beta)).real();
}

double e_qm(const AngleConfig& cfg) {
    return correlation(cfg.alpha1(), cfg.beta1()) + correlation(cfg.alpha1(), cfg.beta2()) +
           correlation(cfg.alpha2(), cfg.beta1()) - correlation(cfg.alpha2(), cfg.beta2());
}

}  // namespace bellcheck
