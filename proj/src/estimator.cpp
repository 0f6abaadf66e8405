#include "bellcheck/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bellcheck/errors.hpp"

namespace bellcheck {

EstimatorResult two_point_estimate(std::uint64_t plus_count, std::uint64_t minus_count, double scale) {
    const std::uint64_t n = plus_count + minus_count;
    if (n == 0) throw ValidationError("estimate needs at least one sample");
    const double nd = static_cast<double>(n);
    // (plus - minus) / n is formed before scaling so a one-sided sample gives
    // exactly +-scale.
    const double r = (static_cast<double>(plus_count) - static_cast<double>(minus_count)) / nd;
    EstimatorResult out;
    out.mean = scale * r;
    out.n = n;
    if (n > 1) {
        const double variance = nd / (nd - 1.0) * scale * scale * std::max(0.0, 1.0 - r * r);
        out.std_error = std::sqrt(variance / nd);
    }
    return out;
}

EstimatorResult combine_signed(std::span<const EstimatorResult> parts, std::span<const int> signs) {
    if (parts.size() != signs.size() || parts.empty()) throw ValidationError("combine_signed: size mismatch");
    EstimatorResult out;
    out.n = std::numeric_limits<std::uint64_t>::max();
    double var = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.mean += signs[i] * parts[i].mean;
        var += parts[i].std_error * parts[i].std_error;
        out.n = std::min(out.n, parts[i].n);
    }
    out.std_error = std::sqrt(var);
    return out;
}

}  // namespace bellcheck
