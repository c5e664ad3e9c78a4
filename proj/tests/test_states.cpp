#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"

using namespace qotp;
using namespace qotp::test;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}

TEST_CASE("density_of produces the expected outer products") {
    CHECK(max_abs_diff(density_of(PureState::basis(2, 0)).mat(),
                       ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 0.0})) == 0.0);

    const PureState plus({kInvSqrt2, kInvSqrt2});
    CHECK(max_abs_diff(density_of(plus).mat(), ComplexMatrix(2, 2, {0.5, 0.5, 0.5, 0.5})) <=
          1e-15);

    const PureState circular({kInvSqrt2, Complex(0, kInvSqrt2)});
    const ComplexMatrix expected(
        2, 2, {0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5});
    CHECK(max_abs_diff(density_of(circular).mat(), expected) <= 1e-15);
}

TEST_CASE("density_of always satisfies the density-matrix invariants") {
    SplitMix64 rng(11);
    for (std::size_t dim : {2, 4, 8}) {
        for (int round = 0; round < 10; ++round) {
            const DensityMatrix rho = density_of(random_pure_state(dim, rng));
            CHECK(std::abs(trace(rho.mat()) - Complex(1, 0)) <= 1e-10);
        }
    }
}

TEST_CASE("mix forms convex combinations") {
    const DensityMatrix zero = density_of(PureState::basis(2, 0));
    const DensityMatrix one = density_of(PureState::basis(2, 1));
    CHECK(max_abs_diff(mix({{0.5, zero}, {0.5, one}}).mat(), completely_mixed(2).mat()) <= 1e-15);

    const DensityMatrix plus = density_of(PureState({kInvSqrt2, kInvSqrt2}));
    CHECK(max_abs_diff(mix({{0.5, zero}, {0.5, plus}}).mat(),
                       ComplexMatrix(2, 2, {0.75, 0.25, 0.25, 0.25})) <= 1e-15);

    CHECK(max_abs_diff(mix({{1.0, plus}}).mat(), plus.mat()) == 0.0);

    CHECK_THROWS_AS(mix({{0.5, zero}, {0.4, one}}), PreconditionError);
    CHECK_THROWS_AS(mix({{1.5, zero}, {-0.5, one}}), PreconditionError);
}

TEST_CASE("completely_mixed is I/M with entropy n") {
    CHECK(max_abs_diff(completely_mixed(2).mat(), ComplexMatrix(2, 2, {0.5, 0.0, 0.0, 0.5})) ==
          0.0);
    CHECK(max_abs_diff(completely_mixed(4).mat(),
                       Complex(0.25, 0) * ComplexMatrix::identity(4)) == 0.0);
    for (std::size_t n = 1; n <= 3; ++n)
        CHECK(von_neumann_entropy(completely_mixed(std::size_t{1} << n)) ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
}

TEST_CASE("bell_state amplitudes") {
    const PureState phi_plus = bell_state(BellKind::PhiPlus);
    CHECK(max_abs_diff(outer(phi_plus),
                       outer(PureState({kInvSqrt2, 0.0, 0.0, kInvSqrt2}))) <= 1e-15);

    const PureState psi_minus = bell_state(BellKind::PsiMinus);
    CHECK(psi_minus.amplitudes()[1] == Complex(kInvSqrt2, 0));
    CHECK(psi_minus.amplitudes()[2] == Complex(-kInvSqrt2, 0));
}

TEST_CASE("pauli displacements of Phi+ run through all four Bell states") {
    const PureState phi_plus = bell_state(BellKind::PhiPlus);
    const BellKind expected[4] = {BellKind::PhiPlus, BellKind::PsiPlus, BellKind::PsiMinus,
                                  BellKind::PhiMinus};
    for (int x = 0; x < 4; ++x) {
        const ComplexMatrix displaced = tensor(sigma(x), ComplexMatrix::identity(2));
        std::vector<Complex> amps(4);
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc(0, 0);
            for (std::size_t c = 0; c < 4; ++c) acc += displaced(r, c) * phi_plus.amplitudes()[c];
            amps[r] = acc;
        }
        const PureState moved(amps);
        CHECK(std::abs(moved.overlap(bell_state(expected[x]))) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("von_neumann_entropy vanishes on pure states") {
    SplitMix64 rng(12);
    for (std::size_t dim : {2, 4, 8}) {
        for (int round = 0; round < 10; ++round) {
            const DensityMatrix rho = density_of(random_pure_state(dim, rng));
            CHECK(std::abs(von_neumann_entropy(rho)) <= 1e-9);
        }
    }
}

TEST_CASE("von_neumann_entropy of the example target matches the oracle") {
    const ComplexMatrix m(2, 2, {0.75, 0.25, 0.25, 0.25});
    const auto [hi, lo] = char_poly_eigenvalues_2x2(m);
    const double expected = -hi * std::log2(hi) - lo * std::log2(lo);
    CHECK(expected == doctest::Approx(0.6008760366928562).epsilon(1e-12));
    CHECK(von_neumann_entropy(DensityMatrix(m)) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("shannon_entropy basics") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t count = std::size_t{1} << (2 * n);
        std::vector<double> uniform(count, 1.0 / static_cast<double>(count));
        CHECK(shannon_entropy(uniform) ==
              doctest::Approx(2.0 * static_cast<double>(n)).epsilon(1e-12));
    }
    std::vector<double> point(5, 0.0);
    point[0] = 1.0;
    CHECK(shannon_entropy(point) == 0.0);
    CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(shannon_entropy({0.5, 0.4}), PreconditionError);
    CHECK_THROWS_AS(shannon_entropy({1.5, -0.5}), PreconditionError);
}

// the five entropy properties, each over seeded random instances
TEST_CASE("entropy: additive over tensor products") {
    SplitMix64 rng(13);
    for (int round = 0; round < 50; ++round) {
        const DensityMatrix rho1 = density_of(random_pure_state(2, rng));
        const DensityMatrix rho2 =
            mix({{0.3, density_of(random_pure_state(4, rng))}, {0.7, completely_mixed(4)}});
        const DensityMatrix joint(tensor(rho1.mat(), rho2.mat()));
        CHECK(std::abs(von_neumann_entropy(joint) -
                       (von_neumann_entropy(rho1) + von_neumann_entropy(rho2))) <= 1e-9);
    }
}

TEST_CASE("entropy: invariant under unitary conjugation") {
    SplitMix64 rng(14);
    for (int round = 0; round < 50; ++round) {
        const DensityMatrix rho =
            mix({{0.4, density_of(random_pure_state(4, rng))},
                 {0.6, density_of(random_pure_state(4, rng))}});
        const ComplexMatrix u = random_unitary(4, rng);
        const DensityMatrix rotated(matmul(matmul(u, rho.mat()), dagger(u)));
        CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <= 1e-9);
    }
}

TEST_CASE("entropy: concave in the state") {
    SplitMix64 rng(15);
    for (int round = 0; round < 50; ++round) {
        const double lambda = rng.next_double();
        const DensityMatrix rho1 =
            mix({{0.5, density_of(random_pure_state(4, rng))}, {0.5, completely_mixed(4)}});
        const DensityMatrix rho2 = density_of(random_pure_state(4, rng));
        const DensityMatrix combined = mix({{lambda, rho1}, {1.0 - lambda, rho2}});
        const double lhs = von_neumann_entropy(combined);
        const double rhs =
            lambda * von_neumann_entropy(rho1) + (1.0 - lambda) * von_neumann_entropy(rho2);
        CHECK(lhs >= rhs - 1e-9);
    }
}

TEST_CASE("entropy: bounded by the mixing distribution for non-orthogonal parts") {
    SplitMix64 rng(16);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> p{0.2 + 0.6 * rng.next_double(), 0.0, 0.0};
        p[1] = (1.0 - p[0]) * rng.next_double();
        p[2] = 1.0 - p[0] - p[1];
        std::vector<std::pair<double, DensityMatrix>> parts;
        for (double w : p) parts.emplace_back(w, density_of(random_pure_state(4, rng)));
        CHECK(von_neumann_entropy(mix(parts)) <= shannon_entropy(p) + 1e-9);
    }
}

TEST_CASE("real product states expand to exactly real amplitudes") {
    SplitMix64 rng(17);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> angles(3);
        for (double& a : angles) a = 2.0 * 3.141592653589793 * rng.next_double();
        const PureState expanded = RealProductState(angles).expand();
        for (const Complex& amp : expanded.amplitudes()) CHECK(amp.imag() == 0.0);
    }

    // classical angles give basis states
    const PureState bit10 = RealProductState({3.141592653589793 / 2.0, 0.0}).expand();
    CHECK(std::abs(bit10.overlap(PureState::basis(4, 2))) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("state invariants are enforced") {
    CHECK_THROWS_AS(PureState({1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 2, {0.5, 1.0, 0.0, 0.5})), PreconditionError);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 2, {0.9, 0.0, 0.0, 0.9})), PreconditionError);
    // eigenvalue -0.5: Hermitian and trace 1 but not positive semidefinite
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 2, {1.5, 0.0, 0.0, -0.5})), PreconditionError);
}
