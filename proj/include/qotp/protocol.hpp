#pragma once

#include <cstdint>

#include "qotp/pqc.hpp"

namespace qotp {

/// Seeded key sampler over the channel's term distribution. Stateful (one
/// draw counter); use one KeySource per party.
class KeySource {
public:
    KeySource(std::uint64_t seed, std::vector<double> distribution);

    /// Next key index: splitmix64 draw mapped through the inverse CDF
    /// (cumulative sums in ascending index order; u from the top 53 bits).
    std::size_t draw();

    const std::vector<double>& distribution() const { return distribution_; }

private:
    std::vector<double> distribution_;
    SplitMix64 rng_;
};

KeySource key_source_for(const PQCInstance& inst, std::uint64_t seed);

/// A random plaintext drawn from the instance's own state set (random pure
/// state, random real product, random basis state, or a listed state).
PureState sample_plaintext(const PQCInstance& inst, SplitMix64& rng);

/// Alice: U_i (|phi><phi| (x) rho_a) U_i†.
DensityMatrix encrypt(const PQCInstance& inst, std::size_t key, const PureState& phi);

/// Bob: conjugate back by U_i† and trace out the ancilla.
DensityMatrix decrypt(const PQCInstance& inst, std::size_t key, const DensityMatrix& cipher);

/// Eve: the channel state is the target rho_0 no matter the plaintext.
DensityMatrix eve_view(const PQCInstance& inst);

struct EveEstimate {
    DensityMatrix estimate;
    double distance;  // max-entry distance to the target
};

/// Average of encrypt over sampled keys; samples == 0 enumerates the exact
/// mixture instead of sampling.
EveEstimate estimate_eve_state(const PQCInstance& inst, const PureState& phi,
                               std::size_t samples, std::uint64_t seed);

struct Transcript {
    std::size_t key_index = 0;
    DensityMatrix plaintext;
    DensityMatrix ciphertext;
    DensityMatrix recovered;
    double round_trip_deviation = 0.0;
};

/// One legal Alice->Bob run with a key drawn from the given seed.
Transcript run_protocol(const PQCInstance& inst, const PureState& phi, std::uint64_t seed);

}  // namespace qotp
