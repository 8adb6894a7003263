#include "spade/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spade {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: zero dimension");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = at(r, k);
            if (a == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::scale(Complex factor) {
    for (auto& e : entries_) e *= factor;
    return *this;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<double>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("ComplexMatrix: vector size mismatch");
    std::vector<Complex> y(rows_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc{0.0, 0.0};
        const Complex* row = entries_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
    return y;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("ComplexMatrix: vector size mismatch");
    std::vector<Complex> y(rows_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc{0.0, 0.0};
        const Complex* row = entries_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
    return y;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) return false;
    const double scale = std::max(max_abs(), 1.0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol * scale) return false;
    return true;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

namespace {

// One two-sided Jacobi rotation zeroing A(p,q). The rotation
//   U = [[c, -s*phi], [s*conj(phi), c]],  phi = A(p,q)/|A(p,q)|
// annihilates the (p,q) entry of U^dag A U for tan(2*theta) chosen from
// tau = (A(q,q)-A(p,p)) / (2|A(p,q)|).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a.at(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phi = apq / mag;

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    double t;
    if (tau >= 0.0) {
        t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Columns: [x_p, x_q] <- [x_p*c + x_q*s*conj(phi), -x_p*s*phi + x_q*c]
    for (std::size_t r = 0; r < n; ++r) {
        const Complex arp = a.at(r, p);
        const Complex arq = a.at(r, q);
        a.at(r, p) = arp * c + arq * s * std::conj(phi);
        a.at(r, q) = -arp * s * phi + arq * c;
    }
    // Rows (U^dag from the left).
    for (std::size_t col = 0; col < n; ++col) {
        const Complex apc = a.at(p, col);
        const Complex aqc = a.at(q, col);
        a.at(p, col) = apc * c + aqc * s * phi;
        a.at(q, col) = -apc * s * std::conj(phi) + aqc * c;
    }
    // Force exact symmetry of the treated block.
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = Complex{a.at(p, p).real(), 0.0};
    a.at(q, q) = Complex{a.at(q, q).real(), 0.0};

    for (std::size_t r = 0; r < n; ++r) {
        const Complex vrp = v.at(r, p);
        const Complex vrq = v.at(r, q);
        v.at(r, p) = vrp * c + vrq * s * std::conj(phi);
        v.at(r, q) = -vrp * s * phi + vrq * c;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) sum += std::norm(a.at(r, c));
    return std::sqrt(sum);
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!m.all_finite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
    if (!m.is_hermitian(1e-12)) throw std::invalid_argument("hermitian_eig: matrix not Hermitian");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize exactly so rounding in the input cannot drift the iteration.
    for (std::size_t r = 0; r < n; ++r) {
        a.at(r, r) = Complex{a.at(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
            a.at(r, c) = avg;
            a.at(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double tol = 1e-15 * scale * static_cast<double>(n);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a.at(p, q)) > 1e-300) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a.at(i, i).real() < a.at(j, j).real();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = a.at(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors.at(r, c) = v.at(r, order[c]);
    }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double scale) {
    const EigenDecomposition eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    // V diag(exp(i*scale*w)) V^dag
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                const Complex ph = std::polar(1.0, scale * eig.eigenvalues[k]);
                acc += eig.eigenvectors.at(r, k) * ph * std::conj(eig.eigenvectors.at(c, k));
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

}  // namespace spade
