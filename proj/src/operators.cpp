#include "hwpkit/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hwp {

namespace {

Dim dim_of(const Operator& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("operator must be square");
    return Dim(static_cast<int>(M.rows()));
}

}  // namespace

Ket position_ket(Dim d, std::int64_t j) {
    Ket v = Ket::Zero(d.value());
    v(centered_index(d, j)) = 1.0;
    return v;
}

Ket momentum_ket(Dim d, std::int64_t j) {
    // |P;j> = F|X;j>: amplitudes omega(k j)/sqrt(d) on |X;k>
    Ket v(d.value());
    const double rd = std::sqrt(static_cast<double>(d.value()));
    for (std::int64_t k = -d.half(); k <= d.half(); ++k)
        v(centered_index(d, k)) = omega(d, k * j) / rd;
    return v;
}

Operator identity_op(Dim d) { return Operator::Identity(d.value(), d.value()); }

Operator fourier(Dim d) {
    Operator F(d.value(), d.value());
    const double rd = std::sqrt(static_cast<double>(d.value()));
    for (std::int64_t j = -d.half(); j <= d.half(); ++j)
        for (std::int64_t k = -d.half(); k <= d.half(); ++k)
            F(centered_index(d, j), centered_index(d, k)) = omega(d, j * k) / rd;
    return F;
}

Operator clock_z(const ModInt& alpha) {
    const Dim d = alpha.modulus();
    Operator Z = Operator::Zero(d.value(), d.value());
    for (std::int64_t j = -d.half(); j <= d.half(); ++j)
        Z(centered_index(d, j), centered_index(d, j)) = omega(d, alpha.value() * j);
    return Z;
}

Operator shift_x(const ModInt& beta) {
    const Dim d = beta.modulus();
    Operator X = Operator::Zero(d.value(), d.value());
    for (std::int64_t j = -d.half(); j <= d.half(); ++j)
        X(centered_index(d, j + beta.value()), centered_index(d, j)) = 1.0;
    return X;
}

Operator position_op(Dim d) {
    Operator x = Operator::Zero(d.value(), d.value());
    for (std::int64_t j = -d.half(); j <= d.half(); ++j)
        x(centered_index(d, j), centered_index(d, j)) = static_cast<double>(j);
    return x;
}

Operator momentum_op(Dim d) {
    const Operator F = fourier(d);
    return F * position_op(d) * F.adjoint();
}

Operator displacement(const ModInt& alpha, const ModInt& beta, const ModInt& gamma) {
    return dp_operator(alpha, beta, gamma, 0);
}

Operator displacement(Dim d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
    return dp_operator(d, alpha, beta, gamma, 0);
}

Operator parity(Dim d) {
    Operator P = Operator::Zero(d.value(), d.value());
    for (std::int64_t j = -d.half(); j <= d.half(); ++j)
        P(centered_index(d, -j), centered_index(d, j)) = 1.0;
    return P;
}

std::pair<Operator, Operator> parity_projectors(Dim d) {
    const Operator P = parity(d);
    const Operator I = identity_op(d);
    return {(I + P) / 2.0, (I - P) / 2.0};
}

double parity_expectation(const Operator& rho) {
    const Dim d = dim_of(rho);
    constexpr double tol = 1e-10;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("parity_expectation: input is not Hermitian");
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > tol)
        throw std::invalid_argument("parity_expectation: input does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol)
        throw std::invalid_argument("parity_expectation: input is not positive semidefinite");
    return (parity(d) * rho).trace().real();
}

Operator displaced_parity(const ModInt& alpha, const ModInt& beta) {
    const Dim d = alpha.modulus();
    return displacement(alpha + alpha, beta + beta, ModInt(0, d)) * parity(d);
}

Operator displaced_parity(Dim d, std::int64_t alpha, std::int64_t beta) {
    return displacement(d, 2 * alpha, 2 * beta, 0) * parity(d);
}

BasisAction dp_action_position(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu,
                               std::int64_t j) {
    const std::int64_t s = (nu % 2 == 0) ? 1 : -1;
    return {two_inverse_value(d) * a * b + a * j * s + g, s * j + b};
}

BasisAction dp_action_momentum(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu,
                               std::int64_t j) {
    const std::int64_t s = (nu % 2 == 0) ? 1 : -1;
    return {-two_inverse_value(d) * a * b - b * j * s + g, s * j + a};
}

Operator dp_operator(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu) {
    Operator M = Operator::Zero(d.value(), d.value());
    for (std::int64_t j = -d.half(); j <= d.half(); ++j) {
        const BasisAction act = dp_action_position(d, a, b, g, nu, j);
        M(centered_index(d, act.label), centered_index(d, j)) = omega(d, act.phase_exponent);
    }
    return M;
}

Operator dp_operator(const ModInt& alpha, const ModInt& beta, const ModInt& gamma, int nu) {
    if (alpha.modulus() != beta.modulus() || alpha.modulus() != gamma.modulus())
        throw std::invalid_argument("dp_operator: mixed moduli");
    return dp_operator(alpha.modulus(), alpha.value(), beta.value(), gamma.value(), nu);
}

Operator dp_factor_product(Dim d, std::int64_t a, std::int64_t b, std::int64_t g, int nu) {
    Operator M = clock_z(ModInt(a, d)) * shift_x(ModInt(b, d));
    M *= omega(d, g - two_inverse_value(d) * a * b);
    if (nu % 2) M *= parity(d);
    return M;
}

bool is_unitary(const Operator& U, double tol) {
    if (U.rows() != U.cols()) return false;
    const Operator I = Operator::Identity(U.rows(), U.cols());
    return (U.adjoint() * U - I).cwiseAbs().maxCoeff() <= tol;
}

Operator principal_log_hamiltonian(const Operator& U) {
    const Dim d = dim_of(U);
    if (!is_unitary(U))
        throw std::invalid_argument("principal_log_hamiltonian: input is not unitary within 1e-10");
    // A unitary is normal, so its Schur form is diagonal and the Schur basis is
    // an orthonormal eigenbasis; this keeps h Hermitian without balancing
    // against a non-orthogonal eigenvector matrix.
    Eigen::ComplexSchur<Operator> schur(U);
    const Operator& Q = schur.matrixU();
    const Operator& T = schur.matrixT();
    Eigen::VectorXd scaled(d.value());
    constexpr double pi = std::numbers::pi;
    for (int k = 0; k < d.value(); ++k) {
        double theta = std::arg(T(k, k));
        if (theta < -pi + 1e-13) theta = pi;  // branch (-pi, pi]: -pi maps to +pi
        scaled(k) = d.value() * theta / (2.0 * pi);
    }
    Operator h = Q * scaled.asDiagonal() * Q.adjoint();
    return (h + Operator(h.adjoint())) / 2.0;
}

Operator evolve(const Operator& h, double t) {
    if ((h - Operator(h.adjoint())).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("evolve: generator is not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    const Eigen::VectorXd& vals = es.eigenvalues();
    Eigen::VectorXcd phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k)
        phases(k) = std::exp(std::complex<double>(0.0, vals(k) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs_diff(const Operator& A, const Operator& B) {
    return (A - B).cwiseAbs().maxCoeff();
}

}  // namespace hwp
