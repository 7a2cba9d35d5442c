#pragma once

#include <complex>

#include "hwpkit/group.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"

namespace hwp {

enum class Axis { Z, X };

// Operator representation of the dihedral group: Z^a P^nu on the Z axis,
// X^a P^nu on the X axis. The X-axis family is produced by Fourier
// conjugation of the Z-axis family (the two are intertwined by F).
struct DihedralRep {
    Axis axis;
    Dim dim;
};

Operator rep_element(const DihedralRep& rep, const ModInt& a, int nu);
Operator rep_element(const DihedralRep& rep, const DihedralElement& e);

// Tr[Theta Z^a P^nu] and Tr[Theta X^a P^nu]: the one-axis Wigner-Weyl
// functions. The nu = 0 slice is a Weyl line, the nu = 1 slice a Wigner line
// at the halved argument.
std::complex<double> wz_function(const Operator& theta, const ModInt& a, int nu);
std::complex<double> wx_function(const Operator& theta, const ModInt& a, int nu);

// (1/d) sum_a rep(a, nu): the rank-one marginal projector |X;0><X;0| on the
// Z axis (both nu), |P;0><P;0| on the X axis.
Operator marginal_rep(const DihedralRep& rep, int nu);

}  // namespace hwp
