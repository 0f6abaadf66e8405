#pragma once

#include <cstdint>
#include <span>

namespace bellcheck {

/// Finite-sample estimate of an expectation.
struct EstimatorResult {
    double mean = 0.0;
    double std_error = 0.0;  // s / sqrt(n), s the unbiased sample deviation
    std::uint64_t n = 0;
};

/// Estimate for a variable taking the two values +scale and -scale, from
/// exact integer counts. Being count based, the result does not depend on
/// summation order.
EstimatorResult two_point_estimate(std::uint64_t plus_count, std::uint64_t minus_count, double scale = 1.0);

/// sum_i signs[i] * parts[i] for independent estimates; errors add in
/// quadrature and n is the smallest part count.
EstimatorResult combine_signed(std::span<const EstimatorResult> parts, std::span<const int> signs);

}  // namespace bellcheck
