#include "qotp/pqc.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qotp/rng.hpp"

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

constexpr std::size_t kMaxPadQubits = 5;
constexpr std::size_t kGridAnglesPerQubit = 16;   // step pi/8
constexpr std::size_t kGridCap = 4096;
constexpr std::size_t kRandomAngleTuples = 100;
constexpr std::uint64_t kVerifySeed = 42;

std::size_t log2_exact(std::size_t dim) {
    std::size_t n = 0;
    std::size_t v = 1;
    while (v < dim) {
        v <<= 1;
        ++n;
    }
    return v == dim ? n : static_cast<std::size_t>(-1);
}

std::string angle_list(const std::vector<double>& angles) {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < angles.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.6g", angles[i]);
        out += buf;
        if (i + 1 < angles.size()) out += ", ";
    }
    return out + ")";
}

struct DeviationTracker {
    double worst = 0.0;
    bool ok = true;
    std::string witness;

    void record(double deviation, double tol, const std::string& description) {
        if (deviation > worst) worst = deviation;
        if (ok && deviation > tol) {
            ok = false;
            witness = description;
        }
    }
};

void check_state(const PQCInstance& inst, const PureState& phi, double tol,
                 const std::string& description, DeviationTracker& tracker) {
    const std::size_t d = phi.dim();
    ComplexMatrix outer(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            outer(r, c) = phi.amplitudes()[r] * std::conj(phi.amplitudes()[c]);
    const ComplexMatrix out = apply_to_operator(inst.channel(), outer);
    tracker.record(max_abs_diff(out, inst.target().mat()), tol, description);
}

}  // namespace

PQCInstance::PQCInstance(StateSet states, MixedUnitaryChannel channel, DensityMatrix target)
    : states_(std::move(states)), channel_(std::move(channel)), target_(std::move(target)) {
    if (const auto* full = std::get_if<FullHilbert>(&states_)) {
        require(full->n >= 1, "FullHilbert needs n >= 1");
        require(full->n == channel_.input_qubits(), "state set and channel qubit counts differ");
    } else if (const auto* rp = std::get_if<RealProduct>(&states_)) {
        require(rp->n >= 1, "RealProduct needs n >= 1");
        require(rp->n == channel_.input_qubits(), "state set and channel qubit counts differ");
    } else if (const auto* cls = std::get_if<ClassicalStates>(&states_)) {
        require(cls->k >= 2, "ClassicalStates needs k >= 2");
        require(cls->k <= channel_.input_dim(),
                "ClassicalStates set exceeds the channel input space");
    } else {
        const auto& list = std::get<ExplicitList>(states_).states;
        require(!list.empty(), "explicit state list must be non-empty");
        for (const PureState& phi : list)
            require(phi.dim() == channel_.input_dim(),
                    "listed state dimension must match the channel input space");
    }
    require(target_.dim() == channel_.total_dim(),
            "target dimension must match the channel output space");
}

VerificationReport verify_pqc(const PQCInstance& inst, double tol) {
    DeviationTracker tracker;
    const MixedUnitaryChannel& e = inst.channel();

    if (const auto* full = std::get_if<FullHilbert>(&inst.states())) {
        // Operator-basis check: E(|x><x|) must equal the target and
        // E(|x><y|), x != y, must vanish; linearity covers every pure state.
        const std::size_t d = std::size_t{1} << full->n;
        ComplexMatrix basis_op(d, d);
        for (std::size_t x = 0; x < d; ++x) {
            basis_op(x, x) = 1.0;
            const ComplexMatrix out = apply_to_operator(e, basis_op);
            basis_op(x, x) = 0.0;
            tracker.record(max_abs_diff(out, inst.target().mat()), tol,
                           "basis operator |" + std::to_string(x) + "><" + std::to_string(x) + "|");
        }
        for (std::size_t x = 0; x < d; ++x) {
            for (std::size_t y = 0; y < d; ++y) {
                if (x == y) continue;
                basis_op(x, y) = 1.0;
                const ComplexMatrix out = apply_to_operator(e, basis_op);
                basis_op(x, y) = 0.0;
                tracker.record(max_abs(out), tol,
                               "off-diagonal operator |" + std::to_string(x) + "><" +
                                   std::to_string(y) + "|");
            }
        }
    } else if (const auto* rp = std::get_if<RealProduct>(&inst.states())) {
        const std::size_t n = rp->n;
        constexpr double pi = 3.141592653589793;
        std::vector<std::size_t> odometer(n, 0);
        std::vector<double> angles(n);
        bool grid_done = false;
        for (std::size_t count = 0; count < kGridCap && !grid_done; ++count) {
            for (std::size_t i = 0; i < n; ++i)
                angles[i] = static_cast<double>(odometer[i]) * (pi / 8.0);
            check_state(inst, RealProductState(angles).expand(), tol,
                        "real product state " + angle_list(angles), tracker);
            std::size_t i = n;
            while (true) {
                if (i == 0) {
                    grid_done = true;
                    break;
                }
                --i;
                if (++odometer[i] < kGridAnglesPerQubit) break;
                odometer[i] = 0;
            }
        }
        SplitMix64 rng(kVerifySeed);
        for (std::size_t s = 0; s < kRandomAngleTuples; ++s) {
            for (std::size_t i = 0; i < n; ++i) angles[i] = 2.0 * pi * rng.next_double();
            check_state(inst, RealProductState(angles).expand(), tol,
                        "random real product sample #" + std::to_string(s), tracker);
        }
    } else if (const auto* cls = std::get_if<ClassicalStates>(&inst.states())) {
        for (std::size_t i = 0; i < cls->k; ++i)
            check_state(inst, PureState::basis(e.input_dim(), i), tol,
                        "classical state |" + std::to_string(i) + ">", tracker);
    } else {
        const auto& list = std::get<ExplicitList>(inst.states()).states;
        for (std::size_t i = 0; i < list.size(); ++i)
            check_state(inst, list[i], tol, "listed state #" + std::to_string(i), tracker);
    }

    return VerificationReport{tracker.ok, tracker.worst, tracker.witness};
}

PQCInstance build_pauli_otp(std::size_t n) {
    require(n >= 1 && n <= kMaxPadQubits, "pauli pad supports 1 <= n <= 5");
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<std::pair<double, PauliString>> terms;
    terms.reserve(count);
    const double p = 1.0 / static_cast<double>(count);
    for (std::size_t idx = 0; idx < count; ++idx)
        terms.emplace_back(p, PauliString::from_index(idx, n));
    return PQCInstance(FullHilbert{n}, MixedUnitaryChannel::from_pauli_terms(n, terms),
                       completely_mixed(std::size_t{1} << n));
}

PQCInstance build_real_otp(std::size_t n) {
    require(n >= 1 && n <= kMaxPadQubits, "real pad supports 1 <= n <= 5");
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::pair<double, PauliString>> terms;
    terms.reserve(count);
    const double p = 1.0 / static_cast<double>(count);
    for (std::size_t bits = 0; bits < count; ++bits) {
        std::vector<std::uint8_t> symbols(n);
        for (std::size_t i = 0; i < n; ++i)
            symbols[i] = ((bits >> (n - 1 - i)) & 1) ? 2 : 0;  // sigma_0 or sigma_2
        terms.emplace_back(p, PauliString(std::move(symbols)));
    }
    return PQCInstance(RealProduct{n}, MixedUnitaryChannel::from_pauli_terms(n, terms),
                       completely_mixed(count));
}

PQCInstance build_example_pqc() {
    const double h = 1.0 / std::sqrt(2.0);
    const ComplexMatrix hadamard(2, 2, {h, h, h, -h});
    std::vector<ChannelTerm> terms;
    terms.push_back(ChannelTerm{0.5, ComplexMatrix::identity(2),
                                PauliString(std::vector<std::uint8_t>{0})});
    terms.push_back(ChannelTerm{0.5, hadamard, std::nullopt});
    MixedUnitaryChannel channel(1, std::move(terms));

    std::vector<PureState> states;
    states.push_back(PureState::basis(2, 0));
    states.push_back(PureState({h, h}));

    DensityMatrix target(ComplexMatrix(2, 2, {0.75, 0.25, 0.25, 0.25}));
    return PQCInstance(ExplicitList{std::move(states)}, std::move(channel), std::move(target));
}

PQCInstance lift_to_classical(const PQCInstance& inst) {
    const auto* full = std::get_if<FullHilbert>(&inst.states());
    require(full != nullptr, "lift_to_classical needs a FullHilbert base instance");
    require(!inst.channel().has_ancilla(), "lift_to_classical needs an ancilla-free base");

    const std::size_t n = full->n;
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t big_dim = dim * dim;  // 4^n
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));

    // Column x of U is (pauli_x (x) I) applied to the maximally entangled
    // state, i.e. U[(a,b), x] = pauli_x(a,b) / sqrt(2^n). The columns are the
    // Bell-product basis, so U is unitary.
    ComplexMatrix u(big_dim, big_dim);
    for (std::size_t x = 0; x < big_dim; ++x) {
        const ComplexMatrix pauli = pauli_matrix(PauliString::from_index(x, n));
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) u(a * dim + b, x) = pauli(a, b) * inv_sqrt;
    }

    const ComplexMatrix eye = ComplexMatrix::identity(dim);
    std::vector<ChannelTerm> lifted_terms;
    lifted_terms.reserve(inst.channel().terms().size());
    for (const ChannelTerm& term : inst.channel().terms())
        lifted_terms.push_back(ChannelTerm{term.p, matmul(tensor(eye, term.u), u), std::nullopt});

    DensityMatrix target(tensor(completely_mixed(dim).mat(), inst.target().mat()));
    return PQCInstance(ClassicalStates{big_dim},
                       MixedUnitaryChannel(2 * n, std::move(lifted_terms)), std::move(target));
}

double key_entropy(const PQCInstance& inst) {
    return shannon_entropy(inst.channel().probabilities());
}

bool certify_theorem3(const PQCInstance& inst, double tol) {
    require(!inst.channel().has_ancilla(), "certify_theorem3 needs an ancilla-free instance");
    const bool full = std::holds_alternative<FullHilbert>(inst.states());
    const auto* cls = std::get_if<ClassicalStates>(&inst.states());
    const bool full_classical = cls != nullptr && cls->k == inst.channel().input_dim();
    require(full || full_classical,
            "certify_theorem3 needs FullHilbert or the complete ClassicalStates set");

    if (!verify_pqc(inst, tol).ok) return false;
    const DensityMatrix mixed = completely_mixed(inst.channel().total_dim());
    if (max_abs_diff(inst.target().mat(), mixed.mat()) <= tol) return true;
    throw std::logic_error(
        "certify_theorem3: verified instance with non-mixed target; the theorem rules this out");
}

Theorem4Report certify_theorem4(const PQCInstance& inst, double tol) {
    require(!inst.channel().has_ancilla(), "certify_theorem4 needs an ancilla-free instance");
    require(std::holds_alternative<FullHilbert>(inst.states()),
            "certify_theorem4 needs a FullHilbert instance");
    const std::size_t n = inst.channel().input_qubits();
    require(max_abs_diff(inst.target().mat(), completely_mixed(std::size_t{1} << n).mat()) <= tol,
            "certify_theorem4 needs the completely mixed target");
    require(verify_pqc(inst, tol).ok, "certify_theorem4 needs a verified instance");

    const double bound = 1.0 / static_cast<double>(std::size_t{1} << (2 * n));
    Theorem4Report report;
    report.term_count = inst.channel().terms().size();
    report.ok = true;
    for (const ChannelTerm& term : inst.channel().terms()) {
        const PauliCoefficients coeffs =
            pauli_decompose(Complex(std::sqrt(term.p), 0.0) * term.u);
        double parseval = 0.0;
        for (const Complex& c : coeffs.coeffs) parseval += std::norm(c);
        if (std::abs(parseval - term.p) > tol) report.ok = false;
        if (term.p > bound + tol) report.ok = false;
        if (term.p > report.max_p) report.max_p = term.p;
    }
    return report;
}

Theorem6Report certify_theorem6(const PQCInstance& inst, double tol) {
    const auto* cls = std::get_if<ClassicalStates>(&inst.states());
    require(cls != nullptr, "certify_theorem6 needs a ClassicalStates instance");
    const std::size_t m_prime = log2_exact(cls->k);
    require(m_prime != static_cast<std::size_t>(-1),
            "certify_theorem6 needs a power-of-two state count");
    require(verify_pqc(inst, tol).ok, "certify_theorem6 needs a verified instance");

    Theorem6Report report;
    report.s_rho0 = von_neumann_entropy(inst.target());
    report.h_p = shannon_entropy(inst.channel().probabilities());
    report.s_ancilla =
        inst.channel().has_ancilla() ? von_neumann_entropy(inst.channel().ancilla()) : 0.0;
    report.lower_ok = report.s_rho0 >= static_cast<double>(m_prime) + report.s_ancilla - tol;
    report.upper_ok = report.s_rho0 <= report.h_p + report.s_ancilla + tol;
    return report;
}

}  // namespace qotp
