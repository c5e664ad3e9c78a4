#pragma once

#include <cmath>
#include <cstdint>

#include "qotp/complex_matrix.hpp"

namespace qotp {

/// splitmix64 stream (Steele/Lea/Flood). Fully specified and portable so that
/// seeded runs reproduce byte-for-byte. Not a cryptographic generator; key
/// sampling in the protocol simulator uses it for determinism only.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1): top 53 bits / 2^53.
    double next_double() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }

    /// Standard-normal approximation: sum of 12 uniforms minus 6.
    double next_normalish() {
        double acc = 0.0;
        for (int i = 0; i < 12; ++i) acc += next_double();
        return acc - 6.0;
    }

private:
    std::uint64_t state_;
};

/// Random unitary assembled from complex Jacobi plane rotations and a random
/// diagonal phase, suitable for property tests and conjugation families.
inline ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
    ComplexMatrix u = ComplexMatrix::identity(dim);
    constexpr double two_pi = 6.283185307179586;
    for (std::size_t p = 0; p + 1 < dim; ++p) {
        for (std::size_t q = p + 1; q < dim; ++q) {
            const double theta = two_pi * rng.next_double();
            const double phi = two_pi * rng.next_double();
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const Complex e_phi(std::cos(phi), std::sin(phi));
            // right-multiply by the plane rotation in coordinates (p,q)
            for (std::size_t k = 0; k < dim; ++k) {
                const Complex ukp = u(k, p);
                const Complex ukq = u(k, q);
                u(k, p) = c * ukp - std::conj(s * e_phi) * ukq;
                u(k, q) = (s * e_phi) * ukp + c * ukq;
            }
        }
    }
    for (std::size_t k = 0; k < dim; ++k) {
        const double alpha = two_pi * rng.next_double();
        const Complex e_alpha(std::cos(alpha), std::sin(alpha));
        for (std::size_t r = 0; r < dim; ++r) u(r, k) = u(r, k) * e_alpha;
    }
    return u;
}

}  // namespace qotp
