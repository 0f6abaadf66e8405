#include "bellcheck/toperator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellcheck/errors.hpp"
#include "bellcheck/parallel.hpp"
#include "bellcheck/rng.hpp"

namespace bellcheck {
namespace {

constexpr double kSpectrumTol = 1e-9;
// Eigenvectors of eigenvalues closer than this are not individually
// resolved; t0 and t1 are then handled as one eigenspace.
constexpr double kClusterGap = 1e-6;
constexpr std::uint64_t kTStreamId = 5;

double sin_product(const AngleConfig& cfg) {
    return std::sin(2.0 * (cfg.alpha1().radians() - cfg.alpha2().radians())) *
           std::sin(2.0 * (cfg.beta1().radians() - cfg.beta2().radians()));
}

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

ComplexMatrix build_t(const AngleConfig& cfg) {
    const auto xa1 = x_operator(cfg.alpha1());
    const auto xa2 = x_operator(cfg.alpha2());
    const auto yb1 = y_operator(cfg.beta1());
    const auto yb2 = y_operator(cfg.beta2());
    return xa1 * yb1 + xa1 * yb2 + xa2 * yb1 - xa2 * yb2;
}

double t0_closed_form(const AngleConfig& cfg) { return 2.0 * std::sqrt(std::max(0.0, 1.0 - sin_product(cfg))); }

double t1_closed_form(const AngleConfig& cfg) { return 2.0 * std::sqrt(std::max(0.0, 1.0 + sin_product(cfg))); }

double e_closed_form(const AngleConfig& cfg) {
    const double a1 = cfg.alpha1().radians();
    const double a2 = cfg.alpha2().radians();
    const double b1 = cfg.beta1().radians();
    const double b2 = cfg.beta2().radians();
    return -std::cos(2.0 * (a1 - b1)) - std::cos(2.0 * (a1 - b2)) - std::cos(2.0 * (a2 - b1)) +
           std::cos(2.0 * (a2 - b2));
}

TSpectrum t_spectrum(const AngleConfig& cfg) {
    const auto t = build_t(cfg);
    if (!is_hermitian(t, 1e-13)) throw InternalError("CHSH operator is not Hermitian");
    const auto eig = eig_hermitian(t);
    const auto psi = singlet_state();

    TSpectrum out;
    out.eigenvalues = eig.eigenvalues;
    out.t0 = t0_closed_form(cfg);
    out.e = e_closed_form(cfg);
    const auto& lam = eig.eigenvalues;

    // Locate +t0 and -t0 among the numeric eigenvalues; the other two must
    // be a symmetric pair +-t1.
    auto nearest = [&](double target, std::size_t skip) {
        std::size_t best = lam.size();
        for (std::size_t k = 0; k < lam.size(); ++k) {
            if (k == skip) continue;
            if (best == lam.size() || std::abs(lam[k] - target) < std::abs(lam[best] - target)) best = k;
        }
        return best;
    };
    const std::size_t ip = nearest(out.t0, lam.size());
    const std::size_t im = nearest(-out.t0, ip);
    if (std::abs(lam[ip] - out.t0) > kSpectrumTol || std::abs(lam[im] + out.t0) > kSpectrumTol) {
        throw InternalError("numeric spectrum does not contain +-t0 = " + fmt(out.t0));
    }
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        if (k != ip && k != im) rest.push_back(k);
    }
    const double hi = std::max(lam[rest[0]], lam[rest[1]]);
    const double lo = std::min(lam[rest[0]], lam[rest[1]]);
    if (std::abs(hi + lo) > kSpectrumTol) throw InternalError("remaining eigenvalues are not a +-t1 pair");
    out.t1 = 0.5 * (hi - lo);

    if (std::abs(out.e) > out.t0 + kSpectrumTol) {
        throw InternalError("|E| = " + fmt(std::abs(out.e)) + " exceeds t0 = " + fmt(out.t0));
    }

    std::vector<double> weight(lam.size());
    for (std::size_t k = 0; k < lam.size(); ++k) weight[k] = std::norm(inner(eig.eigenvectors.column(k), psi));

    if (out.t0 < kSpectrumTol) {
        // Both atoms sit at 0: the outcome is deterministically zero.
        out.w_plus = 0.5;
        out.w_minus = 0.5;
        out.numeric_w_plus = 0.5 * (weight[ip] + weight[im]);
        out.numeric_w_minus = out.numeric_w_plus;
        for (std::size_t k : rest) out.t1_weight += weight[k];
    } else {
        out.w_plus = std::clamp(0.5 * (1.0 + out.e / out.t0), 0.0, 1.0);
        out.w_minus = std::clamp(0.5 * (1.0 - out.e / out.t0), 0.0, 1.0);
        out.degenerate = std::abs(out.t0 - out.t1) <= kClusterGap;
        if (out.degenerate) {
            for (std::size_t k = 0; k < lam.size(); ++k) {
                (lam[k] > 0.0 ? out.numeric_w_plus : out.numeric_w_minus) += weight[k];
            }
        } else {
            out.numeric_w_plus = weight[ip];
            out.numeric_w_minus = weight[im];
            for (std::size_t k : rest) {
                if (std::sqrt(weight[k]) > kSpectrumTol) {
                    throw InternalError("eigenvector at +-t1 overlaps the singlet: |<v|Psi>| = " +
                                        fmt(std::sqrt(weight[k])));
                }
                out.t1_weight += weight[k];
            }
        }
        if (std::abs(out.numeric_w_plus - out.w_plus) > kSpectrumTol) {
            throw InternalError("closed-form and eigenvector weights disagree");
        }
    }
    return out;
}

EstimatorResult sample_t(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed, std::size_t shards,
                         std::size_t workers) {
    if (n == 0) throw ValidationError("sample count must be at least 1");
    if (shards == 0) throw ValidationError("shard count must be at least 1");
    const TSpectrum spec = t_spectrum(cfg);
    const CounterStream stream(derive_stream_key(seed, kTStreamId));
    std::vector<std::uint64_t> plus_by_shard(shards);
    for_each_shard(shards, workers, [&](std::size_t s) {
        const std::uint64_t begin = n * s / shards;
        const std::uint64_t end = n * (s + 1) / shards;
        std::uint64_t plus = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            if (stream.uniform(i) < spec.w_plus) ++plus;
        }
        plus_by_shard[s] = plus;
    });
    std::uint64_t plus = 0;
    for (auto p : plus_by_shard) plus += p;
    return two_point_estimate(plus, n - plus, spec.t0);
}

}  // namespace bellcheck
