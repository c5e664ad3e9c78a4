#pragma once

#include <optional>
#include <vector>

#include "qotp/pauli.hpp"
#include "qotp/states.hpp"

namespace qotp {

inline constexpr double kChannelTol = 1e-10;
inline constexpr double kNegligibleProbability = 1e-15;

struct ChannelTerm {
    double p;
    ComplexMatrix u;
    /// Set when the unitary was constructed as a Pauli string; lets the
    /// serializer emit the compact "pauli" form.
    std::optional<PauliString> pauli_label;
};

/// Mixed-unitary superoperator E = {sqrt(p_i) U_i} acting on n input qubits,
/// optionally extended by a fixed (m-n)-qubit ancilla appended before the
/// unitaries apply. Terms with p below kNegligibleProbability are dropped at
/// construction (the dropped_negligible_terms flag records it).
class MixedUnitaryChannel {
public:
    /// Ancilla-free channel (m == n).
    MixedUnitaryChannel(std::size_t n, std::vector<ChannelTerm> terms);

    /// Channel with ancilla; m is deduced from the term dimension.
    MixedUnitaryChannel(std::size_t n, DensityMatrix ancilla, std::vector<ChannelTerm> terms);

    static MixedUnitaryChannel from_pauli_terms(
        std::size_t n, const std::vector<std::pair<double, PauliString>>& terms);

    std::size_t input_qubits() const { return n_; }
    std::size_t total_qubits() const { return m_; }
    std::size_t input_dim() const { return std::size_t{1} << n_; }
    std::size_t total_dim() const { return std::size_t{1} << m_; }

    bool has_ancilla() const { return ancilla_.has_value(); }
    const DensityMatrix& ancilla() const;

    const std::vector<ChannelTerm>& terms() const { return terms_; }
    std::vector<double> probabilities() const;

    bool dropped_negligible_terms() const { return dropped_negligible_terms_; }

private:
    void validate();

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::optional<DensityMatrix> ancilla_;
    std::vector<ChannelTerm> terms_;
    bool dropped_negligible_terms_ = false;
};

/// sum_i p_i U_i (rho (x) rho_a) U_i†, terms reduced in ascending order.
DensityMatrix apply(const MixedUnitaryChannel& e, const DensityMatrix& rho);

/// Linear extension of apply to arbitrary operators on the input space.
ComplexMatrix apply_to_operator(const MixedUnitaryChannel& e, const ComplexMatrix& m);

/// Block matrix of the channel's action on the operator basis {|x><y|}:
/// block (x,y) is apply_to_operator(e, |x><y|). Determines the channel's
/// action by linearity, so equal process matrices mean identical channels.
struct ProcessMatrix {
    std::size_t input_dim = 0;
    ComplexMatrix mat;  // side input_dim * total_dim
};

ProcessMatrix process_matrix(const MixedUnitaryChannel& e);

/// Max-entry distance of the process matrices <= tol. Shape mismatch
/// (different n, m, or ancillas differing beyond tol) throws rather than
/// returning false.
bool channels_equal(const MixedUnitaryChannel& a, const MixedUnitaryChannel& b, double tol);

enum class ConjugationSide { Left, Right, Both };

/// Replaces each U_i by V*U_i, U_i*V, or V*U_i*V†. Pauli labels are dropped.
MixedUnitaryChannel conjugate_terms(const MixedUnitaryChannel& e, const ComplexMatrix& v,
                                    ConjugationSide side);

}  // namespace qotp
