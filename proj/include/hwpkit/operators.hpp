#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "hwpkit/ring.hpp"

namespace hwp {

using Operator = Eigen::MatrixXcd;  // d x d, row/col in centered position basis
using Ket = Eigen::VectorXcd;       // length d, centered position basis

Ket position_ket(Dim d, std::int64_t j);  // |X;j>
Ket momentum_ket(Dim d, std::int64_t j);  // |P;j> = F|X;j>

Operator identity_op(Dim d);
Operator fourier(Dim d);                    // F_{jk} = omega(jk)/sqrt(d)
Operator clock_z(const ModInt& alpha);      // Z^alpha = diag omega(alpha j)
Operator shift_x(const ModInt& beta);       // X^beta |X;j> = |X;j+beta>
Operator position_op(Dim d);                // diag of centered j
Operator momentum_op(Dim d);                // F x F+

// D(alpha,beta,gamma) = Z^alpha X^beta omega(gamma - 2^{-1} alpha beta),
// built column-by-column from its closed-form basis action.
Operator displacement(const ModInt& alpha, const ModInt& beta, const ModInt& gamma);
Operator displacement(Dim d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

Operator parity(Dim d);  // F^2: |X;j> -> |X;-j>
std::pair<Operator, Operator> parity_projectors(Dim d);  // (even, odd), ranks (d+1)/2 and (d-1)/2

// Tr(P rho) for a density matrix; rejects non-Hermitian, non-unit-trace or
// non-PSD input (1e-10 slack on each check).
double parity_expectation(const Operator& rho);

// Displaced parity P(alpha,beta) = D(2 alpha, 2 beta, 0) P; involutive.
Operator displaced_parity(const ModInt& alpha, const ModInt& beta);
Operator displaced_parity(Dim d, std::int64_t alpha, std::int64_t beta);

// Displacement-parity operator DP(alpha,beta,gamma,nu) = D(alpha,beta,gamma) P^nu.
Operator dp_operator(const ModInt& alpha, const ModInt& beta, const ModInt& gamma, int nu);
Operator dp_operator(Dim d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma, int nu);

// Closed-form action of DP on a basis ket: output = omega(phase_exponent) |basis; label>.
struct BasisAction {
    std::int64_t phase_exponent;
    std::int64_t label;
};
// DP|X;j> = omega(2^{-1}ab + a j (-1)^nu + g) |X; (-1)^nu j + b>
BasisAction dp_action_position(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu,
                               std::int64_t j);
// DP|P;j> = omega(-2^{-1}ab - b j (-1)^nu + g) |P; (-1)^nu j + a>
BasisAction dp_action_momentum(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu,
                               std::int64_t j);

// Test oracle: the same operator assembled by multiplying factor matrices
// Z^a X^b omega(g - 2^{-1}ab) P^nu instead of the closed-form column build.
Operator dp_factor_product(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu);

// Hermitian h = (d / 2 pi i) log U with eigenphases in (-pi, pi]; a phase at
// exactly -pi is mapped to +pi. Requires U unitary within 1e-10. Satisfies
// exp(i h 2 pi / d) = U.
Operator principal_log_hamiltonian(const Operator& U);

// exp(i h t) for Hermitian h, via spectral decomposition.
Operator evolve(const Operator& h, double t);

// max |A - B| entrywise
double max_abs_diff(const Operator& A, const Operator& B);

bool is_unitary(const Operator& U, double tol = 1e-10);

}  // namespace hwp
