#include "qotp/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

std::size_t log2_exact(std::size_t dim) {
    std::size_t n = 0;
    std::size_t v = 1;
    while (v < dim) {
        v <<= 1;
        ++n;
    }
    return v == dim ? n : static_cast<std::size_t>(-1);
}

}  // namespace

MixedUnitaryChannel::MixedUnitaryChannel(std::size_t n, std::vector<ChannelTerm> terms)
    : n_(n), terms_(std::move(terms)) {
    validate();
}

MixedUnitaryChannel::MixedUnitaryChannel(std::size_t n, DensityMatrix ancilla,
                                         std::vector<ChannelTerm> terms)
    : n_(n), ancilla_(std::move(ancilla)), terms_(std::move(terms)) {
    validate();
}

void MixedUnitaryChannel::validate() {
    require(n_ >= 1, "channel needs at least one input qubit");
    require(!terms_.empty(), "channel needs at least one term");

    const std::size_t term_dim = terms_.front().u.rows();
    m_ = log2_exact(term_dim);
    require(m_ != static_cast<std::size_t>(-1) && m_ >= n_,
            "channel unitaries must be 2^m x 2^m with m >= n");

    if (ancilla_.has_value()) {
        require(m_ > n_, "ancilla requires m > n");
        require(ancilla_->dim() == (std::size_t{1} << (m_ - n_)),
                "ancilla dimension must be 2^(m-n)");
    } else {
        require(m_ == n_, "terms larger than the input space need an ancilla");
    }

    double prob_sum = 0.0;
    std::vector<ChannelTerm> kept;
    kept.reserve(terms_.size());
    for (ChannelTerm& term : terms_) {
        require(term.p >= 0.0, "term probabilities must be non-negative");
        require(term.u.rows() == term_dim && term.u.cols() == term_dim,
                "all channel terms must share one dimension");
        require(is_unitary(term.u, kChannelTol), "channel terms must be unitary");
        prob_sum += term.p;
        if (term.p < kNegligibleProbability) {
            dropped_negligible_terms_ = true;
            continue;
        }
        kept.push_back(std::move(term));
    }
    require(std::abs(prob_sum - 1.0) <= kChannelTol, "term probabilities must sum to 1");
    require(!kept.empty(), "all channel terms were negligible");
    terms_ = std::move(kept);
}

MixedUnitaryChannel MixedUnitaryChannel::from_pauli_terms(
    std::size_t n, const std::vector<std::pair<double, PauliString>>& terms) {
    std::vector<ChannelTerm> built;
    built.reserve(terms.size());
    for (const auto& [p, label] : terms) {
        require(label.n() == n, "pauli term length must match the qubit count");
        built.push_back(ChannelTerm{p, pauli_matrix(label), label});
    }
    return MixedUnitaryChannel(n, std::move(built));
}

const DensityMatrix& MixedUnitaryChannel::ancilla() const {
    require(ancilla_.has_value(), "channel has no ancilla");
    return *ancilla_;
}

std::vector<double> MixedUnitaryChannel::probabilities() const {
    std::vector<double> out;
    out.reserve(terms_.size());
    for (const ChannelTerm& term : terms_) out.push_back(term.p);
    return out;
}

ComplexMatrix apply_to_operator(const MixedUnitaryChannel& e, const ComplexMatrix& m) {
    require(m.rows() == e.input_dim() && m.cols() == e.input_dim(),
            "operator dimension must match the channel input space");
    const ComplexMatrix extended = e.has_ancilla() ? tensor(m, e.ancilla().mat()) : m;
    ComplexMatrix out(e.total_dim(), e.total_dim());
    for (const ChannelTerm& term : e.terms()) {
        out = out + (Complex(term.p, 0.0) * matmul(matmul(term.u, extended), dagger(term.u)));
    }
    return out;
}

DensityMatrix apply(const MixedUnitaryChannel& e, const DensityMatrix& rho) {
    return DensityMatrix(apply_to_operator(e, rho.mat()));
}

ProcessMatrix process_matrix(const MixedUnitaryChannel& e) {
    const std::size_t in_dim = e.input_dim();
    const std::size_t out_dim = e.total_dim();
    ComplexMatrix mat(in_dim * out_dim, in_dim * out_dim);
    ComplexMatrix basis_op(in_dim, in_dim);
    for (std::size_t x = 0; x < in_dim; ++x) {
        for (std::size_t y = 0; y < in_dim; ++y) {
            basis_op(x, y) = 1.0;
            const ComplexMatrix block = apply_to_operator(e, basis_op);
            basis_op(x, y) = 0.0;
            for (std::size_t a = 0; a < out_dim; ++a)
                for (std::size_t b = 0; b < out_dim; ++b)
                    mat(x * out_dim + a, y * out_dim + b) = block(a, b);
        }
    }
    ProcessMatrix out{in_dim, std::move(mat)};
    require(is_hermitian(out.mat, kChannelTol), "process matrix must be Hermitian");
    require(std::abs(trace(out.mat) - Complex(static_cast<double>(in_dim), 0.0)) <= 1e-8,
            "process matrix trace must equal the input dimension");
    return out;
}

bool channels_equal(const MixedUnitaryChannel& a, const MixedUnitaryChannel& b, double tol) {
    require(a.input_qubits() == b.input_qubits() && a.total_qubits() == b.total_qubits(),
            "channels_equal: channel shapes differ");
    require(a.has_ancilla() == b.has_ancilla(), "channels_equal: ancilla presence differs");
    if (a.has_ancilla())
        require(max_abs_diff(a.ancilla().mat(), b.ancilla().mat()) <= tol,
                "channels_equal: ancillas differ");
    return max_abs_diff(process_matrix(a).mat, process_matrix(b).mat) <= tol;
}

MixedUnitaryChannel conjugate_terms(const MixedUnitaryChannel& e, const ComplexMatrix& v,
                                    ConjugationSide side) {
    require(v.is_square() && v.rows() == e.total_dim(),
            "conjugating unitary must match the channel dimension");
    require(is_unitary(v, kChannelTol), "conjugating matrix must be unitary");
    std::vector<ChannelTerm> terms;
    terms.reserve(e.terms().size());
    for (const ChannelTerm& term : e.terms()) {
        ComplexMatrix u;
        switch (side) {
            case ConjugationSide::Left:
                u = matmul(v, term.u);
                break;
            case ConjugationSide::Right:
                u = matmul(term.u, v);
                break;
            case ConjugationSide::Both:
                u = matmul(matmul(v, term.u), dagger(v));
                break;
        }
        terms.push_back(ChannelTerm{term.p, std::move(u), std::nullopt});
    }
    if (e.has_ancilla()) return MixedUnitaryChannel(e.input_qubits(), e.ancilla(), std::move(terms));
    return MixedUnitaryChannel(e.input_qubits(), std::move(terms));
}

}  // namespace qotp
