#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace spade {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Sized for the small operators
/// used throughout (side <= ~20); no attempt at large-scale performance.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& scale(Complex factor);

    /// y = M x for a real vector x (overlap vectors are real).
    std::vector<Complex> apply(const std::vector<double>& x) const;
    std::vector<Complex> apply(const std::vector<Complex>& x) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian(double tol) const;
    bool all_finite() const;

    /// max_ij |A_ij - B_ij|
    double max_abs_diff(const ComplexMatrix& other) const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws std::invalid_argument if the input is not square or not
/// Hermitian within 1e-12 (relative to the largest entry).
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// exp(i * scale * h) for Hermitian h, computed through the
/// eigendecomposition so the result is unitary to machine precision.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double scale);

}  // namespace spade
