#pragma once

#include <utility>
#include <vector>

#include "qotp/complex_matrix.hpp"
#include "qotp/rng.hpp"

namespace qotp {

inline constexpr double kStateTol = 1e-10;

/// Norm-1 complex vector. Global phase is not normalized away; tests compare
/// pure states via |<phi|psi>|.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes);

    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    /// <this|other>
    Complex overlap(const PureState& other) const;

private:
    std::vector<Complex> amplitudes_;
};

/// Hermitian, trace-1, positive-semidefinite matrix (all within kStateTol;
/// eigenvalues down to -1e-10 count as rounding noise, anything lower is
/// rejected). Validated at construction.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix mat);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& mat() const { return mat_; }

private:
    ComplexMatrix mat_;
};

/// Tensor product of real-amplitude qubits cos(theta_i)|0> + sin(theta_i)|1>.
class RealProductState {
public:
    explicit RealProductState(std::vector<double> angles);

    std::size_t qubits() const { return angles_.size(); }
    const std::vector<double>& angles() const { return angles_; }

    /// Expansion to the full 2^n amplitude vector; imaginary parts are
    /// exactly zero.
    PureState expand() const;

private:
    std::vector<double> angles_;
};

/// |phi><phi|
DensityMatrix density_of(const PureState& phi);

/// Convex combination sum(weight_i * rho_i); weights must be non-negative and
/// sum to 1 within kStateTol.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts);

/// I_dim / dim
DensityMatrix completely_mixed(std::size_t dim);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState bell_state(BellKind kind);

/// -sum(lambda_i log2 lambda_i) over the eigenvalue spectrum, in bits.
/// Eigenvalues in [-1e-10, 0) are clamped to 0 before the log.
double von_neumann_entropy(const DensityMatrix& rho);

/// -sum(p_i log2 p_i) in bits; p must be a probability vector.
double shannon_entropy(const std::vector<double>& p);

/// Seeded Haar-ish pure state: 2*dim normal-approximating draws, normalized.
PureState random_pure_state(std::size_t dim, SplitMix64& rng);

}  // namespace qotp
