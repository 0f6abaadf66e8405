#pragma once

#include <cstddef>
#include <vector>

namespace bellcheck::lp {

struct PhaseOneResult {
    bool feasible = false;
    /// Minimum of the sum of artificial variables; 0 up to rounding when
    /// feasible.
    double infeasibility = 0.0;
    /// A basic feasible point (meaningful when feasible).
    std::vector<double> x;
    /// Constraint rows found linearly dependent on the others.
    std::size_t redundant_rows = 0;
    int pivots = 0;
};

/// Decides whether {x >= 0 : A x = b} is nonempty with a dense phase-one
/// simplex. `a` is row-major with `rows` rows of `cols` columns. Pivoting
/// uses Bland's smallest-index rule, so degenerate problems terminate.
/// Rows left with a zero-level artificial that cannot be pivoted out are
/// dropped as redundant.
PhaseOneResult phase_one(const std::vector<double>& a, const std::vector<double>& b, std::size_t rows,
                         std::size_t cols, double pivot_tol = 1e-10, double feasibility_tol = 1e-9);

}  // namespace bellcheck::lp
