#include "qotp/protocol.hpp"

#include <cmath>
#include <string>

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

ComplexMatrix outer_product(const PureState& phi) {
    const std::size_t d = phi.dim();
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out(r, c) = phi.amplitudes()[r] * std::conj(phi.amplitudes()[c]);
    return out;
}

}  // namespace

KeySource::KeySource(std::uint64_t seed, std::vector<double> distribution)
    : distribution_(std::move(distribution)), rng_(seed) {
    require(!distribution_.empty(), "key distribution must be non-empty");
    double sum = 0.0;
    for (double p : distribution_) {
        require(p >= 0.0, "key probabilities must be non-negative");
        sum += p;
    }
    require(std::abs(sum - 1.0) <= kStateTol, "key probabilities must sum to 1");
}

std::size_t KeySource::draw() {
    const double u = rng_.next_double();
    double cdf = 0.0;
    for (std::size_t i = 0; i < distribution_.size(); ++i) {
        cdf += distribution_[i];
        if (cdf > u) return i;
    }
    return distribution_.size() - 1;  // guards rounding at the top of the CDF
}

KeySource key_source_for(const PQCInstance& inst, std::uint64_t seed) {
    return KeySource(seed, inst.channel().probabilities());
}

PureState sample_plaintext(const PQCInstance& inst, SplitMix64& rng) {
    if (std::holds_alternative<FullHilbert>(inst.states()))
        return random_pure_state(inst.channel().input_dim(), rng);
    if (const auto* rp = std::get_if<RealProduct>(&inst.states())) {
        constexpr double two_pi = 6.283185307179586;
        std::vector<double> angles(rp->n);
        for (double& theta : angles) theta = two_pi * rng.next_double();
        return RealProductState(std::move(angles)).expand();
    }
    if (const auto* cls = std::get_if<ClassicalStates>(&inst.states()))
        return PureState::basis(inst.channel().input_dim(), rng.next() % cls->k);
    const auto& list = std::get<ExplicitList>(inst.states()).states;
    return list[rng.next() % list.size()];
}

DensityMatrix encrypt(const PQCInstance& inst, std::size_t key, const PureState& phi) {
    const MixedUnitaryChannel& e = inst.channel();
    require(key < e.terms().size(), "key index out of range");
    require(phi.dim() == e.input_dim(), "plaintext dimension must match the channel input");
    ComplexMatrix extended = outer_product(phi);
    if (e.has_ancilla()) extended = tensor(extended, e.ancilla().mat());
    const ComplexMatrix& u = e.terms()[key].u;
    return DensityMatrix(matmul(matmul(u, extended), dagger(u)));
}

DensityMatrix decrypt(const PQCInstance& inst, std::size_t key, const DensityMatrix& cipher) {
    const MixedUnitaryChannel& e = inst.channel();
    require(key < e.terms().size(), "key index out of range");
    require(cipher.dim() == e.total_dim(), "cipher dimension must match the channel output");
    const ComplexMatrix& u = e.terms()[key].u;
    ComplexMatrix undone = matmul(matmul(dagger(u), cipher.mat()), u);
    if (e.has_ancilla()) {
        const std::size_t ancilla_dim = std::size_t{1} << (e.total_qubits() - e.input_qubits());
        undone = partial_trace(undone, e.input_dim(), ancilla_dim, Keep::First);
    }
    return DensityMatrix(std::move(undone));
}

DensityMatrix eve_view(const PQCInstance& inst) { return inst.target(); }

EveEstimate estimate_eve_state(const PQCInstance& inst, const PureState& phi,
                               std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        // exact mixture over all keys
        const ComplexMatrix exact = apply_to_operator(inst.channel(), outer_product(phi));
        const double distance = max_abs_diff(exact, inst.target().mat());
        return EveEstimate{DensityMatrix(exact), distance};
    }
    KeySource source = key_source_for(inst, seed);
    const std::size_t d = inst.channel().total_dim();
    ComplexMatrix acc(d, d);
    for (std::size_t s = 0; s < samples; ++s)
        acc = acc + encrypt(inst, source.draw(), phi).mat();
    const ComplexMatrix mean = Complex(1.0 / static_cast<double>(samples), 0.0) * acc;
    const double distance = max_abs_diff(mean, inst.target().mat());
    return EveEstimate{DensityMatrix(mean), distance};
}

Transcript run_protocol(const PQCInstance& inst, const PureState& phi, std::uint64_t seed) {
    KeySource source = key_source_for(inst, seed);
    const std::size_t key = source.draw();
    DensityMatrix plaintext = density_of(phi);
    DensityMatrix ciphertext = encrypt(inst, key, phi);
    DensityMatrix recovered = decrypt(inst, key, ciphertext);
    const double deviation = max_abs_diff(recovered.mat(), plaintext.mat());
    return Transcript{key, std::move(plaintext), std::move(ciphertext), std::move(recovered),
                      deviation};
}

}  // namespace qotp
