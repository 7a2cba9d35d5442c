#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "hwpkit/operators.hpp"

using namespace hwp;
using cd = std::complex<double>;

TEST_CASE("generator matrices at d=3") {
    const Dim d(3);
    const cd w = omega(d, 1);

    const Operator Z = clock_z(ModInt(1, d));
    CHECK(std::abs(Z(0, 0) - std::conj(w)) < 1e-15);  // label -1 at index 0
    CHECK(std::abs(Z(1, 1) - cd(1.0)) < 1e-15);
    CHECK(std::abs(Z(2, 2) - w) < 1e-15);
    CHECK(std::abs(Z(0, 1)) == 0.0);

    const Operator X = shift_x(ModInt(1, d));
    for (std::int64_t j = -1; j <= 1; ++j) {
        const Ket moved = X * position_ket(d, j);
        CHECK((moved - position_ket(d, j + 1)).cwiseAbs().maxCoeff() < 1e-15);
    }

    const Operator F = fourier(d);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const std::int64_t j = r - 1, k = c - 1;
            CHECK(std::abs(F(r, c) - omega(d, j * k) / std::sqrt(3.0)) < 1e-15);
        }
    CHECK(max_abs_diff(F * F, parity(d)) < 1e-15);
    CHECK(is_unitary(F));

    for (std::int64_t j = -1; j <= 1; ++j) {
        CHECK((parity(d) * position_ket(d, j) - position_ket(d, -j)).cwiseAbs().maxCoeff() <
              1e-15);
        CHECK((F * position_ket(d, j) - momentum_ket(d, j)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("kets orthonormal") {
    const Dim d(5);
    for (std::int64_t j = -2; j <= 2; ++j)
        for (std::int64_t k = -2; k <= 2; ++k) {
            CHECK(std::abs(position_ket(d, j).dot(position_ket(d, k)) -
                           cd(j == k ? 1.0 : 0.0)) < 1e-15);
            CHECK(std::abs(momentum_ket(d, j).dot(momentum_ket(d, k)) -
                           cd(j == k ? 1.0 : 0.0)) < 1e-12);
        }
    // labels wrap: j and j + d name the same ket
    CHECK((position_ket(d, 7) - position_ket(d, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("angular position and momentum") {
    const Dim d(5);
    const Operator x = position_op(d);
    CHECK(std::abs(x(0, 0) - cd(-2.0)) == 0.0);
    CHECK(std::abs(x(4, 4) - cd(2.0)) == 0.0);
    const Operator F = fourier(d);
    CHECK(max_abs_diff(momentum_op(d), F * x * F.adjoint()) < 1e-14);
    for (std::int64_t j = -2; j <= 2; ++j) {
        const Ket pj = momentum_ket(d, j);
        CHECK((momentum_op(d) * pj - static_cast<double>(j) * pj).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("clock shifts momentum labels") {
    const Dim d(3);
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t j = -1; j <= 1; ++j) {
            const Ket moved = clock_z(ModInt(a, d)) * momentum_ket(d, j);
            CHECK((moved - momentum_ket(d, j + a)).cwiseAbs().maxCoeff() < 1e-14);
        }
}

TEST_CASE("displacement word factorization") {
    const Dim d(5);
    CHECK(max_abs_diff(dp_operator(d, 2, 3, 1, 1), dp_factor_product(d, 2, 3, 1, 1)) < 1e-14);
    CHECK(max_abs_diff(displacement(d, 2, 3, 1), dp_operator(d, 2, 3, 1, 0)) < 1e-15);
    CHECK(max_abs_diff(displaced_parity(d, 1, 2),
                       Operator(displacement(d, 2, 4, 0) * parity(d))) < 1e-15);
    CHECK_THROWS_WITH_AS(dp_operator(ModInt(1, Dim(3)), ModInt(1, Dim(5)), ModInt(0, Dim(5)), 0),
                         "dp_operator: mixed moduli", std::invalid_argument);
}

TEST_CASE("closed-form basis action") {
    const Dim d(3);
    // Z acts diagonally in position and shifts momentum labels
    const BasisAction az = dp_action_position(d, 1, 0, 0, 0, 1);
    CHECK(az.phase_exponent == 1);
    CHECK(az.label == 1);
    const BasisAction am = dp_action_momentum(d, 1, 0, 0, 0, 1);
    CHECK(am.phase_exponent == 0);
    CHECK(am.label == 2);
    // the parity word reflects the incoming label
    const BasisAction ap = dp_action_position(d, 0, 0, 0, 1, 1);
    CHECK(ap.label == -1);
}

TEST_CASE("parity expectation guards") {
    const Dim d(3);
    const Ket f = momentum_ket(d, 1);
    const Operator rho = f * f.adjoint();
    const double val = parity_expectation(rho);
    CHECK(std::abs(val - std::real((f.adjoint() * parity(d) * f).value())) < 1e-14);
    CHECK(val >= -1.0);
    CHECK(val <= 1.0);

    Operator bad = rho;
    bad(0, 1) += cd(0.0, 0.3);
    CHECK_THROWS_AS(parity_expectation(bad), std::invalid_argument);                // not Hermitian
    CHECK_THROWS_AS(parity_expectation(Operator(2.0 * rho)), std::invalid_argument);  // trace 2
    Operator indefinite = Operator::Zero(3, 3);
    indefinite(0, 0) = 2.0;
    indefinite(1, 1) = -1.0;
    CHECK_THROWS_AS(parity_expectation(indefinite), std::invalid_argument);  // not PSD
}

TEST_CASE("parity projectors") {
    const Dim d(7);
    const auto [even, odd] = parity_projectors(d);
    CHECK(max_abs_diff(even * even, even) < 1e-14);
    CHECK(max_abs_diff(odd * odd, odd) < 1e-14);
    CHECK(max_abs_diff(even + odd, identity_op(d)) < 1e-14);
    CHECK(std::abs(even.trace() - cd(4.0)) < 1e-13);
    CHECK(std::abs(odd.trace() - cd(3.0)) < 1e-13);
}

TEST_CASE("principal log round trip") {
    const Dim d(3);
    const Operator U = dp_operator(d, 1, 1, 0, 0);
    const Operator h = principal_log_hamiltonian(U);
    CHECK(max_abs_diff(h, h.adjoint()) < 1e-12);
    CHECK(max_abs_diff(evolve(h, 2.0 * std::numbers::pi / 3.0), U) < 1e-10);

    Operator not_unitary = Operator::Identity(3, 3);
    not_unitary(0, 0) = 2.0;
    CHECK_THROWS_AS(principal_log_hamiltonian(not_unitary), std::invalid_argument);
    Operator not_hermitian = Operator::Zero(3, 3);
    not_hermitian(0, 1) = 1.0;
    CHECK_THROWS_AS(evolve(not_hermitian, 1.0), std::invalid_argument);
}
