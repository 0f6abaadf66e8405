#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bellcheck/estimator.hpp"
#include "bellcheck/linalg.hpp"
#include "bellcheck/polarization.hpp"

namespace bellcheck {

/// The CHSH operator X(a1)Y(b1) + X(a1)Y(b2) + X(a2)Y(b1) - X(a2)Y(b2).
ComplexMatrix build_t(const AngleConfig& cfg);

/// 2 sqrt(1 - sin[2(a1 - a2)] sin[2(b1 - b2)])
double t0_closed_form(const AngleConfig& cfg);

/// 2 sqrt(1 + sin[2(a1 - a2)] sin[2(b1 - b2)]). Established numerically
/// against the eigensolver (see the toperator tests), not derived.
double t1_closed_form(const AngleConfig& cfg);

/// Four-cosine expression for the singlet expectation of build_t(cfg).
double e_closed_form(const AngleConfig& cfg);

/// Outcome law of the CHSH operator measured on the singlet: two atoms at
/// +t0 and -t0 with weights (1 +- E/t0)/2.
struct TSpectrum {
    double t0 = 0.0;
    double t1 = 0.0;
    double w_plus = 0.0;
    double w_minus = 0.0;
    double e = 0.0;
    std::vector<double> eigenvalues;  // numeric, descending
    /// Born weight of the singlet on eigenvectors at +-t1 that are not
    /// also at +-t0. Zero by construction when t0 == t1.
    double t1_weight = 0.0;
    /// Born weights on the +t0 / -t0 eigenspaces, from the eigenvectors.
    double numeric_w_plus = 0.0;
    double numeric_w_minus = 0.0;
    /// t0 and t1 closer than the eigenspace clustering tolerance.
    bool degenerate = false;
};

/// Spectrum of build_t(cfg) with closed-form/numeric cross-checks. Throws
/// InternalError if the numeric eigenvalues are not {+-t0, +-t1} within
/// 1e-9, if the +-t1 eigenvectors overlap the singlet by more than 1e-9,
/// or if |E| exceeds t0 by more than 1e-9.
TSpectrum t_spectrum(const AngleConfig& cfg);

/// n single-shot outcomes drawn from the two-atom law; same sharding
/// contract as run_experiments.
EstimatorResult sample_t(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed, std::size_t shards = 1,
                         std::size_t workers = 1);

}  // namespace bellcheck
