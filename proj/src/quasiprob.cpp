#include "bellcheck/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "bellcheck/errors.hpp"
#include "bellcheck/parallel.hpp"
#include "bellcheck/rng.hpp"

namespace bellcheck {
namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kNegativeThreshold = -1e-12;
constexpr std::uint64_t kBetaProbeSeed = 0x6a6b5f62657461ULL;
constexpr int kBetaProbes = 10;

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

double q_value(Angle alpha, Angle alpha_prime, Angle beta) {
    const auto psi = singlet_state();
    const auto op = (x_operator(alpha) + x_operator(alpha_prime)) * y_operator(beta);
    const double sandwich = expectation(psi, op).real();
    const double from_pmfs = joint_pmf(psi, alpha, beta).correlation() + joint_pmf(psi, alpha_prime, beta).correlation();
    if (std::abs(sandwich - from_pmfs) > kIdentityTol) {
        throw InternalError("Q: operator and PMF evaluations differ by " + fmt(std::abs(sandwich - from_pmfs)));
    }
    return from_pmfs;
}

QuasiPmf3::QuasiPmf3(const std::array<double, 8>& values, Angle alpha, Angle alpha_prime, Angle beta)
    : values_(values), alpha_(alpha), alpha_prime_(alpha_prime), beta_(beta) {
    double sum = 0.0;
    for (double v : values_) {
        if (!std::isfinite(v)) throw ValidationError("quasi-probability must be finite");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kIdentityTol) throw ValidationError("quasi-probability does not sum to 1");
}

double QuasiPmf3::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

QuasiPmf3 f_jkl(Angle alpha, Angle alpha_prime, Angle beta) {
    const auto psi = singlet_state();
    std::array<double, 8> values{};
    for (int j = 0; j < 2; ++j) {
        const auto xj = port_state(alpha, j);
        for (int k = 0; k < 2; ++k) {
            const auto xk = port_state(alpha_prime, k);
            const Complex overlap = inner(xj, xk);
            for (int l = 0; l < 2; ++l) {
                const auto yl = port_state(beta, l);
                const Complex left = std::conj(inner(kron(xj, yl), psi));
                const Complex right = inner(kron(xk, yl), psi);
                const Complex f = left * overlap * right;
                if (std::abs(f.imag()) > kIdentityTol) {
                    throw InternalError("quasi-probability has imaginary part " + fmt(f.imag()));
                }
                values[(j * 2 + k) * 2 + l] = f.real();
            }
        }
    }
    return QuasiPmf3(values, alpha, alpha_prime, beta);
}

MarginalResiduals marginal_residuals(const QuasiPmf3& f) {
    const auto psi = singlet_state();
    const auto p_prime = joint_pmf(psi, f.alpha_prime(), f.beta());
    const auto p = joint_pmf(psi, f.alpha(), f.beta());
    MarginalResiduals r;
    double total = 0.0;
    for (double v : f.values()) total += v;
    r.total = std::abs(total - 1.0);
    for (int a = 0; a < 2; ++a) {
        for (int l = 0; l < 2; ++l) {
            r.sum_over_j = std::max(r.sum_over_j, std::abs(f(0, a, l) + f(1, a, l) - p_prime(a, l)));
            r.sum_over_k = std::max(r.sum_over_k, std::abs(f(a, 0, l) + f(a, 1, l) - p(a, l)));
        }
    }
    return r;
}

double q_reconstruct(Angle alpha, Angle alpha_prime, Angle beta) {
    const auto f = f_jkl(alpha, alpha_prime, beta);
    double q = 0.0;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) q += (outcome_value(j) + outcome_value(k)) * outcome_value(l) * f(j, k, l);
        }
    }
    return q;
}

QuasiPmf2::QuasiPmf2(const std::array<double, 4>& values, Angle alpha, Angle alpha_prime)
    : values_(values), alpha_(alpha), alpha_prime_(alpha_prime) {
    double sum = 0.0;
    for (double v : values_) sum += v;
    if (std::abs(sum - 1.0) > kIdentityTol) throw ValidationError("two-index quasi-probability does not sum to 1");
}

double QuasiPmf2::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

QuasiPmf2 f_jk(Angle alpha, Angle alpha_prime) {
    const CounterStream probes(kBetaProbeSeed);
    std::array<double, 4> reference{};
    for (int probe = 0; probe < kBetaProbes; ++probe) {
        const Angle beta(probes.uniform(static_cast<std::uint64_t>(probe)) * std::numbers::pi);
        const auto f = f_jkl(alpha, alpha_prime, beta);
        std::array<double, 4> summed{};
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) summed[j * 2 + k] = f(j, k, 0) + f(j, k, 1);
        }
        if (probe == 0) {
            reference = summed;
            continue;
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (std::abs(summed[i] - reference[i]) > kIdentityTol) {
                throw InternalError("F_jk depends on beta: deviation " + fmt(std::abs(summed[i] - reference[i])));
            }
        }
    }
    return QuasiPmf2(reference, alpha, alpha_prime);
}

std::vector<NegativityWitness> find_negativity(Angle step, std::size_t workers) {
    if (!(step.radians() > 0.0)) throw ValidationError("grid step must be positive");
    const auto points = static_cast<std::size_t>(std::ceil(std::numbers::pi / step.radians() - 1e-9));
    const double step_deg = step.degrees();

    std::vector<std::vector<NegativityWitness>> per_alpha(points);
    for_each_shard(points, workers, [&](std::size_t ia) {
        auto& found = per_alpha[ia];
        for (std::size_t ib = 0; ib < points; ++ib) {
            for (std::size_t ic = 0; ic < points; ++ic) {
                const double a = static_cast<double>(ia) * step_deg;
                const double ap = static_cast<double>(ib) * step_deg;
                const double b = static_cast<double>(ic) * step_deg;
                const auto f = f_jkl(Angle::from_degrees(a), Angle::from_degrees(ap), Angle::from_degrees(b));
                for (int j = 0; j < 2; ++j) {
                    for (int k = 0; k < 2; ++k) {
                        for (int l = 0; l < 2; ++l) {
                            if (f(j, k, l) < kNegativeThreshold) found.push_back({a, ap, b, j, k, l, f(j, k, l)});
                        }
                    }
                }
            }
        }
    });

    std::vector<NegativityWitness> all;
    for (auto& part : per_alpha) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](const NegativityWitness& x, const NegativityWitness& y) {
        return std::tie(x.value, x.alpha_deg, x.alpha_prime_deg, x.beta_deg, x.j, x.k, x.l) <
               std::tie(y.value, y.alpha_deg, y.alpha_prime_deg, y.beta_deg, y.j, y.k, y.l);
    });
    return all;
}

}  // namespace bellcheck
