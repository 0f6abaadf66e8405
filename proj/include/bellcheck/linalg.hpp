#pragma once

// Small dense complex linear algebra for Hilbert spaces of dimension 2, 4
// and 256. Values are immutable once built; every operation returns a new
// object.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellcheck {

using Complex = std::complex<double>;

/// Largest number of entries any matrix or vector may hold (256 x 256).
inline constexpr std::size_t kMaxEntries = 65536;

class ComplexVector {
  public:
    explicit ComplexVector(std::vector<Complex> amplitudes);
    ComplexVector(std::initializer_list<Complex> amplitudes);

    static ComplexVector zeros(std::size_t dim);
    /// Standard basis vector e_index of the given dimension.
    static ComplexVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;

  private:
    std::vector<Complex> amps_;
};

class ComplexMatrix {
  public:
    /// Row-major entries; entries.size() must equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Nested initializer: {{a, b}, {c, d}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix generate(std::size_t rows, std::size_t cols,
                                  const std::function<Complex(std::size_t, std::size_t)>& fn);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const Complex> entries() const { return entries_; }

    /// Column j as a vector.
    ComplexVector column(std::size_t j) const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex s, const ComplexVector& v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);
/// |a><b|
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);
/// <v|A|v>
Complex expectation(const ComplexVector& v, const ComplexMatrix& a);

/// Kronecker product. Throws ValidationError when the result would exceed
/// kMaxEntries entries.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
/// a*b - b*a; both operands square with equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// max_ij |a(i,j) - b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Applies a 2x2 operator to one two-level factor of a state on
/// `sites` two-level systems. Site 0 is the most significant factor of the
/// Kronecker ordering, so this equals kron(I, ..., op, ..., I) * state.
ComplexVector apply_local(const ComplexMatrix& op, std::size_t site, std::size_t sites,
                          const ComplexVector& state);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws ValidationError if max|a - a^dagger| exceeds `tol`, and
/// ConvergenceError if the off-diagonal Frobenius norm is still above 1e-13
/// after 100 sweeps. Eigenvectors in a degenerate eigenspace are an
/// arbitrary orthonormal basis of that space.
EigenDecomposition eig_hermitian(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace bellcheck
