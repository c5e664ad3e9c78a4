#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qotp/channel.hpp"

namespace qotp {

inline constexpr double kDefaultCertifyTol = 1e-9;

/// The state families a private channel may be declared over.
struct FullHilbert {
    std::size_t n;  // all pure n-qubit states
};
struct RealProduct {
    std::size_t n;  // tensor products of real-amplitude qubits
};
struct ClassicalStates {
    std::size_t k;  // the basis states |0> .. |k-1>
};
struct ExplicitList {
    std::vector<PureState> states;
};

using StateSet = std::variant<FullHilbert, RealProduct, ClassicalStates, ExplicitList>;

/// A candidate private quantum channel [S, E, rho_a, rho_0]: the claim is that
/// the keyed channel maps every state of S (extended by the channel's ancilla)
/// to the fixed target rho_0.
class PQCInstance {
public:
    PQCInstance(StateSet states, MixedUnitaryChannel channel, DensityMatrix target);

    const StateSet& states() const { return states_; }
    const MixedUnitaryChannel& channel() const { return channel_; }
    const DensityMatrix& target() const { return target_; }

private:
    StateSet states_;
    MixedUnitaryChannel channel_;
    DensityMatrix target_;
};

struct VerificationReport {
    bool ok = false;
    double worst_deviation = 0.0;
    std::string witness;  // first violating input; empty when ok
};

/// Checks E(|phi><phi| (x) rho_a) == rho_0 over the state set.
///   FullHilbert:     all basis operators |x><y| (diagonal must hit the target,
///                    off-diagonal must vanish), which is sufficient by linearity.
///   ClassicalStates: the k basis states.
///   RealProduct:     a deterministic 16-angles-per-qubit grid (capped at 4096
///                    tuples) plus 100 seeded random angle tuples.
///   ExplicitList:    every listed state.
VerificationReport verify_pqc(const PQCInstance& inst, double tol);

/// The 2n-bit pad: all 4^n Pauli strings, uniform probabilities, full Hilbert
/// set, completely mixed target.
PQCInstance build_pauli_otp(std::size_t n);

/// The n-bit pad for real-amplitude product states: {I,Y}-strings, uniform.
PQCInstance build_real_otp(std::size_t n);

/// The two-state example with non-mixed target [[3/4,1/4],[1/4,1/4]].
PQCInstance build_example_pqc();

/// Turns a full-Hilbert, ancilla-free PQC on n qubits into a PQC for the 4^n
/// classical states on 2n qubits, encoding each classical string as a product
/// of Pauli-displaced Bell states before re-encrypting the second half.
PQCInstance lift_to_classical(const PQCInstance& inst);

/// Shannon entropy (bits) of the key distribution.
double key_entropy(const PQCInstance& inst);

/// Verified full-basis instances without ancilla must have the completely
/// mixed target; returns whether this instance verifies with that target.
/// A verified instance whose target differs throws std::logic_error; the
/// theorem rules it out.
bool certify_theorem3(const PQCInstance& inst, double tol = kDefaultCertifyTol);

struct Theorem4Report {
    double max_p = 0.0;
    std::size_t term_count = 0;
    bool ok = false;
};

/// For a verified depolarizing full-basis pad without ancilla: decomposes each
/// sqrt(p_i) U_i over the Pauli basis, checks Parseval (sum |c_x|^2 == p_i) and
/// the coefficient bound p_i <= 4^-n + tol. Implies N >= 4^n keys.
Theorem4Report certify_theorem4(const PQCInstance& inst, double tol = kDefaultCertifyTol);

struct Theorem6Report {
    double s_rho0 = 0.0;
    double h_p = 0.0;
    double s_ancilla = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
};

/// Entropy sandwich for a verified PQC on ClassicalStates(2^m'):
/// m' + S(rho_a) <= S(rho_0) <= H(p) + S(rho_a), each within tol.
Theorem6Report certify_theorem6(const PQCInstance& inst, double tol = kDefaultCertifyTol);

}  // namespace qotp
