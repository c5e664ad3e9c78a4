#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>

#include "qotp/pauli.hpp"
#include "test_helpers.hpp"

using namespace qotp;
using namespace qotp::test;

TEST_CASE("matmul reproduces the Pauli algebra") {
    CHECK(max_abs_diff(matmul(sigma(1), sigma(1)), ComplexMatrix::identity(2)) == 0.0);

    // sigma_1 * sigma_2 = i * sigma_3
    const ComplexMatrix i_sigma3(2, 2, {Complex(0, 1), 0.0, 0.0, Complex(0, -1)});
    CHECK(max_abs_diff(matmul(sigma(1), sigma(2)), i_sigma3) == 0.0);

    SplitMix64 rng(1);
    const ComplexMatrix m = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(matmul(ComplexMatrix::identity(2), m), m) == 0.0);

    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 2)), PreconditionError);
}

TEST_CASE("dagger is the conjugate transpose and an involution") {
    CHECK(max_abs_diff(dagger(sigma(2)), sigma(2)) == 0.0);

    const ComplexMatrix raising(2, 2, {0.0, 1.0, 0.0, 0.0});
    const ComplexMatrix lowering(2, 2, {0.0, 0.0, 1.0, 0.0});
    CHECK(max_abs_diff(dagger(raising), lowering) == 0.0);

    const ComplexMatrix i_eye = Complex(0, 1) * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(dagger(i_eye), Complex(-1, 0) * i_eye) == 0.0);

    SplitMix64 rng(2);
    const ComplexMatrix m = random_matrix(3, 5, rng);
    CHECK(max_abs_diff(dagger(dagger(m)), m) == 0.0);
}

TEST_CASE("tensor follows the Kronecker block convention") {
    const ComplexMatrix xx = tensor(sigma(1), sigma(1));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(xx(r, c) == (r + c == 3 ? Complex(1, 0) : Complex(0, 0)));

    CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor is associative on integer matrices") {
    const ComplexMatrix a(2, 2, {1.0, 2.0, 3.0, 4.0});
    const ComplexMatrix b(2, 2, {0.0, 1.0, Complex(0, 2), 5.0});
    const ComplexMatrix c(2, 2, {7.0, 0.0, -1.0, Complex(0, -3)});
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
}

TEST_CASE("trace basics") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex(4, 0));
    CHECK(trace(sigma(1)) == Complex(0, 0));
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), PreconditionError);
}

TEST_CASE("trace is cyclic on random 8x8 matrices") {
    SplitMix64 rng(3);
    for (int round = 0; round < 20; ++round) {
        const ComplexMatrix a = random_matrix(8, 8, rng);
        const ComplexMatrix b = random_matrix(8, 8, rng);
        CHECK(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))) <= 1e-12);
    }
}

TEST_CASE("partial_trace reduces the expected factors") {
    const ComplexMatrix bell = outer(bell_state(BellKind::PhiPlus));
    CHECK(max_abs_diff(partial_trace(bell, 2, 2, Keep::First), completely_mixed(2).mat()) <=
          1e-15);

    const DensityMatrix rho1(ComplexMatrix(2, 2, {0.75, 0.25, 0.25, 0.25}));
    const DensityMatrix rho2 = completely_mixed(4);
    const ComplexMatrix joint = tensor(rho1.mat(), rho2.mat());
    CHECK(max_abs_diff(partial_trace(joint, 2, 4, Keep::First), rho1.mat()) <= 1e-15);

    CHECK(max_abs_diff(partial_trace(completely_mixed(4).mat(), 2, 2, Keep::Second),
                       completely_mixed(2).mat()) <= 1e-15);

    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), 2, 2, Keep::First),
                    PreconditionError);
}

TEST_CASE("partial_trace of a tensor product scales by the discarded trace") {
    SplitMix64 rng(4);
    for (int round = 0; round < 10; ++round) {
        const ComplexMatrix a = random_matrix(2, 2, rng);
        const ComplexMatrix b = random_matrix(4, 4, rng);
        CHECK(max_abs_diff(partial_trace(tensor(a, b), 2, 4, Keep::First), trace(b) * a) <= 1e-12);
    }
}

TEST_CASE("hs_inner matches direct trace computations") {
    CHECK(hs_inner(sigma(1), sigma(1)) == Complex(1, 0));
    CHECK(hs_inner(sigma(1), sigma(3)) == Complex(0, 0));

    // oracle: Tr(sigma_1 H)/2 = 1/sqrt2, Tr(H)/2 = 0 (the Hadamard is traceless)
    CHECK(std::abs(hs_inner(sigma(1), hadamard()) - Complex(1.0 / std::sqrt(2.0), 0)) <= 1e-15);
    CHECK(std::abs(hs_inner(ComplexMatrix::identity(2), hadamard())) <= 1e-15);

    CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
                    PreconditionError);
}

TEST_CASE("unitaries have unit Hilbert-Schmidt norm") {
    SplitMix64 rng(5);
    for (std::size_t dim : {2, 4, 8}) {
        const ComplexMatrix u = random_unitary(dim, rng);
        CHECK(is_unitary(u, 1e-12));
        CHECK(std::abs(hs_norm(u) - 1.0) <= 1e-12);
    }
}

TEST_CASE("hermitian_eigenvalues on known spectra") {
    const std::vector<double> z_eigs = hermitian_eigenvalues(sigma(3));
    REQUIRE(z_eigs.size() == 2);
    CHECK(z_eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(z_eigs[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const std::vector<double> mixed_eigs = hermitian_eigenvalues(completely_mixed(2).mat());
    CHECK(mixed_eigs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mixed_eigs[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues agrees with the characteristic-polynomial oracle") {
    const ComplexMatrix m(2, 2, {0.75, 0.25, 0.25, 0.25});
    const auto [hi, lo] = char_poly_eigenvalues_2x2(m);
    // closed form (2 +- sqrt 2)/4
    CHECK(hi == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-15));
    CHECK(lo == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-15));

    const std::vector<double> eigs = hermitian_eigenvalues(m);
    CHECK(std::abs(eigs[0] - hi) <= 1e-12);
    CHECK(std::abs(eigs[1] - lo) <= 1e-12);

    SplitMix64 rng(6);
    for (int round = 0; round < 25; ++round) {
        ComplexMatrix h = random_matrix(2, 2, rng);
        h = Complex(0.5, 0) * (h + dagger(h));
        const auto [big, small] = char_poly_eigenvalues_2x2(h);
        const std::vector<double> got = hermitian_eigenvalues(h);
        CHECK(std::abs(got[0] - big) <= 1e-10);
        CHECK(std::abs(got[1] - small) <= 1e-10);
    }
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})),
                    PreconditionError);
}

TEST_CASE("eigenvalues of U D U-dagger recover the diagonal") {
    SplitMix64 rng(7);
    for (std::size_t dim : {2, 4, 8}) {
        std::vector<double> diag(dim);
        for (double& d : diag) d = 2.0 * rng.next_double() - 1.0;

        ComplexMatrix d_mat(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) d_mat(i, i) = diag[i];
        const ComplexMatrix u = random_unitary(dim, rng);
        const ComplexMatrix conjugated = matmul(matmul(u, d_mat), dagger(u));

        std::sort(diag.begin(), diag.end(), std::greater<double>());
        const std::vector<double> eigs = hermitian_eigenvalues(conjugated);
        for (std::size_t i = 0; i < dim; ++i) CHECK(std::abs(eigs[i] - diag[i]) <= 1e-9);
    }
}

TEST_CASE("matrices reject non-finite entries and bad shapes") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 0.0, 0.0}), PreconditionError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(inf, 0)}), PreconditionError);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0, std::nan(""))}), PreconditionError);
}
