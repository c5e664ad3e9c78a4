#include "qotp/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

bool all_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(entries_.size() == rows * cols, "entry count must equal rows*cols");
    require(all_finite(entries_), "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in matrix sum");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        out(i / a.cols(), i % a.cols()) = a.entries()[i] + b.entries()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in matrix difference");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        out(i / a.cols(), i % a.cols()) = a.entries()[i] - b.entries()[i];
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scale * m(r, c);
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "matmul dimension mismatch: a.cols != b.rows");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(j * b.rows() + r, k * b.cols() + c) = a(j, k) * b(r, c);
    return out;
}

Complex trace(const ComplexMatrix& a) {
    require(a.is_square(), "trace requires a square matrix");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
    return acc;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t dim_a, std::size_t dim_b,
                            Keep keep) {
    require(a.is_square(), "partial_trace requires a square matrix");
    require(dim_a > 0 && dim_b > 0 && a.rows() == dim_a * dim_b,
            "partial_trace: matrix side must equal dim_a*dim_b");
    if (keep == Keep::First) {
        ComplexMatrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j) {
                Complex acc(0.0, 0.0);
                for (std::size_t k = 0; k < dim_b; ++k) acc += a(i * dim_b + k, j * dim_b + k);
                out(i, j) = acc;
            }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t i = 0; i < dim_b; ++i)
        for (std::size_t j = 0; j < dim_b; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < dim_a; ++k) acc += a(k * dim_b + i, k * dim_b + j);
            out(i, j) = acc;
        }
    return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(),
            "hs_inner requires equal square matrices");
    // Tr(a† b) = sum_ij conj(a_ij) b_ij, ascending index order
    Complex acc(0.0, 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) acc += std::conj(a(r, c)) * b(r, c);
    return acc / static_cast<double>(a.rows());
}

double hs_norm(const ComplexMatrix& a) { return std::sqrt(std::abs(hs_inner(a, a).real())); }

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r; c < a.cols(); ++c)
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.rows())) <= tol;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) acc += std::norm(a(r, c));
    return std::sqrt(acc);
}

// Annihilates entry (p,q), p < q, of the Hermitian working matrix with the
// unitary plane rotation J: J(p,p)=c, J(p,q)=s*e^{i phi}, J(q,p)=-s*e^{-i phi},
// J(q,q)=c, applied as A <- J† A J.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (app - aqq) / (2.0 * r);
    const double sign = tau >= 0.0 ? 1.0 : -1.0;
    const double t = -sign / (std::abs(tau) + std::hypot(1.0, tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const Complex s_phase = (t * c) * phase;

    // columns p and q
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - std::conj(s_phase) * akq;
        a(k, q) = s_phase * akp + c * akq;
    }
    // rows p and q
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s_phase * aqk;
        a(q, k) = std::conj(s_phase) * apk + c * aqk;
    }
    // clean the annihilated pair and rounding drift on the diagonal
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const EigenOptions& opts) {
    require(a.is_square(), "hermitian_eigenvalues requires a square matrix");
    require(is_hermitian(a, opts.hermiticity_tol), "hermitian_eigenvalues: input is not Hermitian");

    const std::size_t d = a.rows();
    // symmetrize so the iteration starts from exactly Hermitian data
    ComplexMatrix work(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            work(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

    bool converged = off_diagonal_frobenius(work) < opts.convergence_tol;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(work, p, q);
        converged = off_diagonal_frobenius(work) < opts.convergence_tol;
    }
    if (!converged)
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");

    std::vector<double> eigs(d);
    for (std::size_t i = 0; i < d; ++i) eigs[i] = work(i, i).real();
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

}  // namespace qotp
