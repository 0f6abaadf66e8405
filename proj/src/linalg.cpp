#include "bellcheck/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bellcheck/errors.hpp"

namespace bellcheck {
namespace {

constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

void require_finite(std::span<const Complex> values) {
    for (const auto& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("non-finite complex value");
        }
    }
}

void require_size(std::size_t entries) {
    if (entries == 0) throw ValidationError("empty vector or matrix");
    if (entries > kMaxEntries) {
        throw ValidationError("dimension overflow: " + std::to_string(entries) + " entries exceeds " +
                              std::to_string(kMaxEntries));
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError(std::string(what) + ": dimension mismatch");
    }
}

double off_diagonal_norm(const std::vector<Complex>& m, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) sum += std::norm(m[i * n + j]);
        }
    }
    return std::sqrt(sum);
}

}  // namespace

// --- ComplexVector ---------------------------------------------------------

ComplexVector::ComplexVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    require_size(amps_.size());
    require_finite(amps_);
}

ComplexVector::ComplexVector(std::initializer_list<Complex> amplitudes)
    : ComplexVector(std::vector<Complex>(amplitudes)) {}

ComplexVector ComplexVector::zeros(std::size_t dim) { return ComplexVector(std::vector<Complex>(dim)); }

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ValidationError("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return ComplexVector(std::move(amps));
}

double ComplexVector::norm() const {
    double sum = 0.0;
    for (const auto& z : amps_) sum += std::norm(z);
    return std::sqrt(sum);
}

// --- ComplexMatrix ---------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) throw ValidationError("entry count does not match rows * cols");
    require_size(entries_.size());
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ValidationError("ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
    require_size(entries_.size());
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::generate(std::size_t rows, std::size_t cols,
                                      const std::function<Complex(std::size_t, std::size_t)>& fn) {
    require_size(rows * cols);
    std::vector<Complex> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) e[i * cols + j] = fn(i, j);
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    std::vector<Complex> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return ComplexVector(std::move(v));
}

// --- arithmetic ------------------------------------------------------------

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix sum");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix difference");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product: dimension mismatch");
    std::vector<Complex> e(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aik * b(k, j);
        }
    }
    return ComplexMatrix(a.rows(), b.cols(), std::move(e));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto& z : e) z *= s;
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols() != v.dim()) throw ValidationError("matrix-vector product: dimension mismatch");
    std::vector<Complex> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex sum{};
        for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * v[j];
        out[i] = sum;
    }
    return ComplexVector(std::move(out));
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw ValidationError("vector sum: dimension mismatch");
    std::vector<Complex> out(a.amplitudes().begin(), a.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return ComplexVector(std::move(out));
}

ComplexVector operator*(Complex s, const ComplexVector& v) {
    std::vector<Complex> out(v.amplitudes().begin(), v.amplitudes().end());
    for (auto& z : out) z *= s;
    return ComplexVector(std::move(out));
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw ValidationError("inner product: dimension mismatch");
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
    return ComplexMatrix::generate(a.dim(), b.dim(),
                                   [&](std::size_t i, std::size_t j) { return a[i] * std::conj(b[j]); });
}

Complex expectation(const ComplexVector& v, const ComplexMatrix& a) { return inner(v, a * v); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    require_size(rows * cols);
    std::vector<Complex> e(rows * cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    e[(i * b.rows() + k) * cols + (j * b.cols() + l)] = aij * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    require_size(a.dim() * b.dim());
    std::vector<Complex> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
    }
    return ComplexVector(std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    return ComplexMatrix::generate(a.cols(), a.rows(),
                                   [&](std::size_t i, std::size_t j) { return std::conj(a(j, i)); });
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw ValidationError("commutator: operands must be square with equal dimension");
    }
    return a * b - b * a;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw ValidationError("trace of non-square matrix");
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw ValidationError("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
        }
    }
    return true;
}

ComplexVector apply_local(const ComplexMatrix& op, std::size_t site, std::size_t sites,
                          const ComplexVector& state) {
    if (op.rows() != 2 || op.cols() != 2) throw ValidationError("apply_local: operator must be 2x2");
    if (site >= sites || sites >= 8 * sizeof(std::size_t) || state.dim() != (std::size_t{1} << sites)) {
        throw ValidationError("apply_local: site/state dimension mismatch");
    }
    const std::size_t stride = std::size_t{1} << (sites - 1 - site);
    std::vector<Complex> out(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & stride) continue;
        const Complex lo = state[i];
        const Complex hi = state[i | stride];
        out[i] = op(0, 0) * lo + op(0, 1) * hi;
        out[i | stride] = op(1, 0) * lo + op(1, 1) * hi;
    }
    return ComplexVector(std::move(out));
}

// --- eigensolver -----------------------------------------------------------

EigenDecomposition eig_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw ValidationError("eig_hermitian: matrix is not square");
    if (!is_hermitian(a, tol)) throw ValidationError("eig_hermitian: matrix is not Hermitian within tolerance");

    const std::size_t n = a.rows();
    // Symmetrize so that rounding in the input does not leak into the rotations.
    std::vector<Complex> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    int sweep = 0;
    while (off_diagonal_norm(m, n) > kOffDiagonalTarget) {
        if (sweep == kMaxSweeps) {
            throw ConvergenceError("eig_hermitian: no convergence within " + std::to_string(kMaxSweeps) +
                                   " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = m[p * n + q];
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] turns the (p, q)
                // block real symmetric and then diagonalizes it.
                const Complex phase = std::conj(apq) / mag;
                const double app = m[p * n + p].real();
                const double aqq = m[q * n + q].real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex u_pp = c;
                const Complex u_pq = s;
                const Complex u_qp = -s * phase;
                const Complex u_qq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mkp = m[k * n + p];
                    const Complex mkq = m[k * n + q];
                    m[k * n + p] = mkp * u_pp + mkq * u_qp;
                    m[k * n + q] = mkp * u_pq + mkq * u_qq;
                    const Complex vkp = v[k * n + p];
                    const Complex vkq = v[k * n + q];
                    v[k * n + p] = vkp * u_pp + vkq * u_qp;
                    v[k * n + q] = vkp * u_pq + vkq * u_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mpk = m[p * n + k];
                    const Complex mqk = m[q * n + k];
                    m[p * n + k] = std::conj(u_pp) * mpk + std::conj(u_qp) * mqk;
                    m[q * n + k] = std::conj(u_pq) * mpk + std::conj(u_qq) * mqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                m[p * n + p] = m[p * n + p].real();
                m[q * n + q] = m[q * n + q].real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return m[x * n + x].real() > m[y * n + y].real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix::zeros(n, n), sweep};
    std::vector<Complex> vecs(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = m[src * n + src].real();
        for (std::size_t row = 0; row < n; ++row) vecs[row * n + col] = v[row * n + src];
    }
    out.eigenvectors = ComplexMatrix(n, n, std::move(vecs));
    return out;
}

}  // namespace bellcheck
