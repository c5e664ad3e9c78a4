#include "qotp/states.hpp"

#include <cmath>
#include <string>

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    require(!amplitudes_.empty(), "pure state needs at least one amplitude");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()),
                "pure state amplitudes must be finite");
        norm2 += std::norm(a);
    }
    require(std::abs(std::sqrt(norm2) - 1.0) <= kStateTol, "pure state must have unit norm");
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    require(index < dim, "basis index out of range");
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

Complex PureState::overlap(const PureState& other) const {
    require(dim() == other.dim(), "overlap requires equal dimensions");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < dim(); ++i) acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return acc;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    require(mat_.is_square(), "density matrix must be square");
    require(is_hermitian(mat_, kStateTol), "density matrix must be Hermitian");
    require(std::abs(trace(mat_) - Complex(1.0, 0.0)) <= kStateTol,
            "density matrix must have unit trace");
    for (double lambda : hermitian_eigenvalues(mat_)) {
        require(lambda >= -kStateTol, "density matrix must be positive semidefinite");
    }
}

RealProductState::RealProductState(std::vector<double> angles) : angles_(std::move(angles)) {
    require(!angles_.empty(), "real product state needs at least one qubit");
    for (double theta : angles_) require(std::isfinite(theta), "angles must be finite");
}

PureState RealProductState::expand() const {
    std::vector<Complex> amps{Complex(1.0, 0.0)};
    for (double theta : angles_) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        std::vector<Complex> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * c;
            next[2 * i + 1] = amps[i] * s;
        }
        amps = std::move(next);
    }
    return PureState(std::move(amps));
}

DensityMatrix density_of(const PureState& phi) {
    const std::size_t d = phi.dim();
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out(r, c) = phi.amplitudes()[r] * std::conj(phi.amplitudes()[c]);
    return DensityMatrix(std::move(out));
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts) {
    require(!parts.empty(), "mix of zero states");
    double weight_sum = 0.0;
    for (const auto& [w, rho] : parts) {
        require(w >= 0.0, "mixture weights must be non-negative");
        require(rho.dim() == parts.front().second.dim(), "mixture dimension mismatch");
        weight_sum += w;
    }
    require(std::abs(weight_sum - 1.0) <= kStateTol, "mixture weights must sum to 1");
    const std::size_t d = parts.front().second.dim();
    ComplexMatrix out(d, d);
    for (const auto& [w, rho] : parts) out = out + (Complex(w, 0.0) * rho.mat());
    return DensityMatrix(std::move(out));
}

DensityMatrix completely_mixed(std::size_t dim) {
    require(dim >= 1, "dimension must be at least 1");
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(out));
}

PureState bell_state(BellKind kind) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case BellKind::PhiPlus:
            return PureState({h, 0.0, 0.0, h});
        case BellKind::PhiMinus:
            return PureState({h, 0.0, 0.0, -h});
        case BellKind::PsiPlus:
            return PureState({0.0, h, h, 0.0});
        case BellKind::PsiMinus:
            return PureState({0.0, h, -h, 0.0});
    }
    throw PreconditionError("unknown Bell state kind");
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double bits = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.mat())) {
        if (lambda < 0.0) lambda = 0.0;  // [-1e-10, 0) is rounding noise, construction rejects worse
        if (lambda > 0.0) bits -= lambda * std::log2(lambda);
    }
    return bits;
}

double shannon_entropy(const std::vector<double>& p) {
    require(!p.empty(), "empty probability vector");
    double sum = 0.0;
    for (double x : p) {
        require(x >= 0.0, "probabilities must be non-negative");
        sum += x;
    }
    require(std::abs(sum - 1.0) <= kStateTol, "probabilities must sum to 1");
    double bits = 0.0;
    for (double x : p)
        if (x > 0.0) bits -= x * std::log2(x);
    return bits;
}

PureState random_pure_state(std::size_t dim, SplitMix64& rng) {
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] = Complex(rng.next_normalish(), rng.next_normalish());
        norm2 += std::norm(amps[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= inv;
    return PureState(std::move(amps));
}

}  // namespace qotp
