#include "bellcheck/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "bellcheck/errors.hpp"

namespace bellcheck::lp {
namespace {

constexpr double kReducedCostTol = 1e-12;
constexpr int kMaxPivots = 100000;

class Tableau {
  public:
    Tableau(const std::vector<double>& a, const std::vector<double>& b, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), width_(cols + rows + 1), t_(rows * width_), cost_(width_), basis_(rows) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) = sign * a[i * cols_ + j];
            at(i, cols_ + i) = 1.0;
            at(i, rhs()) = sign * b[i];
            basis_[i] = cols_ + i;
        }
        // Reduced costs of the phase-one objective (sum of artificials) with
        // the artificial basis priced out.
        for (std::size_t j = 0; j < width_; ++j) {
            if (j >= cols_ && j < cols_ + rows_) continue;
            double s = 0.0;
            for (std::size_t i = 0; i < rows_; ++i) s += at(i, j);
            cost_[j] = -s;
        }
    }

    double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    std::size_t rhs() const { return width_ - 1; }
    bool is_artificial(std::size_t var) const { return var >= cols_; }
    double objective() const { return -cost_[width_ - 1]; }

    void pivot(std::size_t row, std::size_t col) {
        const double p = at(row, col);
        for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const double f = at(i, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
            at(i, col) = 0.0;
        }
        const double f = cost_[col];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width_; ++j) cost_[j] -= f * at(row, j);
            cost_[col] = 0.0;
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t width_;
    std::vector<double> t_;
    std::vector<double> cost_;  // last entry holds -objective
    std::vector<std::size_t> basis_;
};

}  // namespace

PhaseOneResult phase_one(const std::vector<double>& a, const std::vector<double>& b, std::size_t rows,
                         std::size_t cols, double pivot_tol, double feasibility_tol) {
    if (a.size() != rows * cols || b.size() != rows) throw ValidationError("phase_one: shape mismatch");

    Tableau tab(a, b, rows, cols);
    PhaseOneResult result;

    while (true) {
        std::size_t enter = tab.width_;
        // Artificials never re-enter.
        for (std::size_t j = 0; j < cols; ++j) {
            if (tab.cost_[j] < -kReducedCostTol) {
                enter = j;
                break;
            }
        }
        if (enter == tab.width_) break;

        std::size_t leave = rows;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double coef = tab.at(i, enter);
            if (coef <= pivot_tol) continue;
            const double ratio = tab.at(i, tab.rhs()) / coef;
            if (leave == rows || ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 && tab.basis_[i] < tab.basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) {
            // Unbounded direction; impossible for a phase-one objective bounded below by 0.
            throw InternalError("phase_one: unbounded phase-one problem");
        }
        tab.pivot(leave, enter);
        if (++result.pivots > kMaxPivots) throw ConvergenceError("phase_one: pivot budget exhausted");
    }

    result.infeasibility = std::max(0.0, tab.objective());
    result.feasible = result.infeasibility <= feasibility_tol;

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t i = 0; result.feasible && i < rows; ++i) {
        if (!tab.is_artificial(tab.basis_[i])) continue;
        std::size_t col = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (std::abs(tab.at(i, j)) > pivot_tol) {
                col = j;
                break;
            }
        }
        if (col == cols) {
            ++result.redundant_rows;
        } else {
            tab.pivot(i, col);
            ++result.pivots;
        }
    }

    result.x.assign(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!tab.is_artificial(tab.basis_[i])) result.x[tab.basis_[i]] = tab.at(i, tab.rhs());
    }
    return result;
}

}  // namespace bellcheck::lp
