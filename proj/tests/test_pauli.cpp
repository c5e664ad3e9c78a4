#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"

using namespace qotp;
using namespace qotp::test;

TEST_CASE("pauli_index uses base-4 big-endian encoding") {
    CHECK(pauli_index(PauliString({0, 0})) == 0);
    CHECK(pauli_index(PauliString({3, 3})) == 15);
    CHECK(pauli_index(PauliString({1, 2})) == 6);

    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t count = std::size_t{1} << (2 * n);
        for (std::size_t idx = 0; idx < count; ++idx)
            CHECK(pauli_index(PauliString::from_index(idx, n)) == idx);
    }
}

TEST_CASE("pauli letters round-trip the symbol convention") {
    CHECK(PauliString::from_letters("IXYZ").symbols() ==
          std::vector<std::uint8_t>{0, 1, 2, 3});
    CHECK(PauliString({1, 3}).to_letters() == "XZ");
    CHECK_THROWS_AS(PauliString::from_letters("XQ"), PreconditionError);
    CHECK_THROWS_AS(PauliString::from_letters(""), PreconditionError);
}

TEST_CASE("pauli_matrix expands tensor products") {
    CHECK(max_abs_diff(pauli_matrix(PauliString({0})), ComplexMatrix::identity(2)) == 0.0);
    CHECK(max_abs_diff(pauli_matrix(PauliString({2})), from_raw(raw_sigma(2))) == 0.0);
    CHECK(max_abs_diff(pauli_matrix(PauliString({1, 3})), tensor(sigma(1), sigma(3))) == 0.0);
    CHECK(max_abs_diff(pauli_matrix(PauliString({0, 3})), tensor(sigma(0), sigma(3))) == 0.0);
}

TEST_CASE("every pauli string is unitary, Hermitian, unit norm and traceless") {
    for (std::size_t n = 1; n <= 2; ++n) {
        const std::size_t count = std::size_t{1} << (2 * n);
        for (std::size_t idx = 0; idx < count; ++idx) {
            const ComplexMatrix p = pauli_matrix(PauliString::from_index(idx, n));
            CHECK(is_unitary(p, 1e-12));
            CHECK(is_hermitian(p, 1e-12));
            CHECK(std::abs(hs_norm(p) - 1.0) <= 1e-12);
            if (idx != 0) CHECK(std::abs(trace(p)) <= 1e-12);
        }
    }
}

TEST_CASE("the pauli strings are orthonormal under hs_inner") {
    for (std::size_t n = 1; n <= 2; ++n) {
        const std::size_t count = std::size_t{1} << (2 * n);
        for (std::size_t a = 0; a < count; ++a) {
            const ComplexMatrix pa = pauli_matrix(PauliString::from_index(a, n));
            for (std::size_t b = 0; b < count; ++b) {
                const ComplexMatrix pb = pauli_matrix(PauliString::from_index(b, n));
                const Complex expected = a == b ? Complex(1, 0) : Complex(0, 0);
                CHECK(std::abs(hs_inner(pa, pb) - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("pauli_decompose on known operators") {
    // an exact pauli string decomposes to an indicator vector
    const PauliCoefficients indicator = pauli_decompose(pauli_matrix(PauliString({2, 1})));
    const std::size_t target = pauli_index(PauliString({2, 1}));
    for (std::size_t idx = 0; idx < indicator.coeffs.size(); ++idx) {
        const Complex expected = idx == target ? Complex(1, 0) : Complex(0, 0);
        CHECK(std::abs(indicator.coeffs[idx] - expected) <= 1e-12);
    }

    // Hadamard = (sigma_1 + sigma_3)/sqrt2
    const PauliCoefficients had = pauli_decompose(hadamard());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(had.coeffs[0]) <= 1e-15);
    CHECK(std::abs(had.coeffs[1] - Complex(inv_sqrt2, 0)) <= 1e-15);
    CHECK(std::abs(had.coeffs[2]) <= 1e-15);
    CHECK(std::abs(had.coeffs[3] - Complex(inv_sqrt2, 0)) <= 1e-15);

    const PauliCoefficients half = pauli_decompose(Complex(0.5, 0) * ComplexMatrix::identity(2));
    CHECK(std::abs(half.coeffs[0] - Complex(0.5, 0)) <= 1e-15);
    for (std::size_t idx = 1; idx < 4; ++idx) CHECK(std::abs(half.coeffs[idx]) <= 1e-15);

    CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::identity(3)), PreconditionError);
    CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::identity(1)), PreconditionError);
}

TEST_CASE("pauli_reconstruct inverts pauli_decompose") {
    const std::size_t target = pauli_index(PauliString({3, 1}));
    PauliCoefficients indicator{2, std::vector<Complex>(16)};
    indicator.coeffs[target] = 1.0;
    CHECK(max_abs_diff(pauli_reconstruct(indicator), pauli_matrix(PauliString({3, 1}))) == 0.0);

    SplitMix64 rng(21);
    for (int round = 0; round < 10; ++round) {
        const ComplexMatrix m = random_matrix(4, 4, rng);
        CHECK(max_abs_diff(pauli_reconstruct(pauli_decompose(m)), m) <= 1e-10);
    }

    const PauliCoefficients zeros{1, std::vector<Complex>(4)};
    CHECK(max_abs(pauli_reconstruct(zeros)) == 0.0);
}

TEST_CASE("parseval holds over the pauli basis") {
    SplitMix64 rng(22);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int round = 0; round < 5; ++round) {
            const ComplexMatrix m = random_matrix(std::size_t{1} << n, std::size_t{1} << n, rng);
            const PauliCoefficients coeffs = pauli_decompose(m);
            double sum = 0.0;
            for (const Complex& c : coeffs.coeffs) sum += std::norm(c);
            CHECK(std::abs(sum - hs_norm(m) * hs_norm(m)) <= 1e-10);
        }
    }
}

TEST_CASE("pauli strings validate their symbols") {
    CHECK_THROWS_AS(PauliString(std::vector<std::uint8_t>{}), PreconditionError);
    CHECK_THROWS_AS(PauliString({4}), PreconditionError);
    CHECK_THROWS_AS(PauliString::from_index(16, 2), PreconditionError);
}
