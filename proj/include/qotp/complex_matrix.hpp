#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qotp {

using Complex = std::complex<double>;

/// Thrown when an input violates a documented precondition (bad dimensions,
/// broken state invariants, unparseable documents). The CLI maps this family
/// to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Entries must stay finite; constructors
/// taking data reject NaN/Inf. Maximum supported register is 12 qubits
/// (4096 x 4096), far above anything the constructions here need.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);

/// Standard matrix product. The inner-index sum runs in ascending order so
/// results are bit-reproducible across runs.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product; block (j,k) of the result is a(j,k) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of diagonal entries in ascending index order.
Complex trace(const ComplexMatrix& a);

enum class Keep { First, Second };

/// Trace out one tensor factor of a (dim_a * dim_b)-dimensional operator.
/// Keep::First returns the dim_a x dim_a reduced operator.
ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t dim_a, std::size_t dim_b,
                            Keep keep);

/// Normalized Hilbert-Schmidt inner product Tr(a† b) / d for d x d inputs.
/// The induced norm assigns 1 to every unitary.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(hs_inner(a, a).re)
double hs_norm(const ComplexMatrix& a);

/// Largest entry magnitude; the max-entry distance used throughout is
/// max_abs(a - b).
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

struct EigenOptions {
    double hermiticity_tol = 1e-10;
    double convergence_tol = 1e-12;  // off-diagonal Frobenius norm target
    int max_sweeps = 100;
};

/// All eigenvalues of a Hermitian matrix, descending, via cyclic Jacobi
/// rotations. Throws PreconditionError for non-Hermitian input and
/// std::runtime_error if max_sweeps pass without convergence.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const EigenOptions& opts = {});

}  // namespace qotp
