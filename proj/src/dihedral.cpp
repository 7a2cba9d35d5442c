#include "hwpkit/dihedral.hpp"

namespace hwp {

namespace {

Operator z_axis_element(Dim d, const ModInt& a, int nu) {
    Operator M = clock_z(a);
    if (nu % 2) M = M * parity(d);
    return M;
}

}  // namespace

Operator rep_element(const DihedralRep& rep, const ModInt& a, int nu) {
    const Dim d = rep.dim;
    const Operator Mz = z_axis_element(d, a, nu);
    if (rep.axis == Axis::Z) return Mz;
    const Operator F = fourier(d);
    return F.adjoint() * Mz * F;  // X-axis family via Fourier conjugation
}

Operator rep_element(const DihedralRep& rep, const DihedralElement& e) {
    return rep_element(rep, e.a, e.nu);
}

std::complex<double> wz_function(const Operator& theta, const ModInt& a, int nu) {
    return (theta * rep_element({Axis::Z, a.modulus()}, a, nu)).trace();
}

std::complex<double> wx_function(const Operator& theta, const ModInt& a, int nu) {
    return (theta * rep_element({Axis::X, a.modulus()}, a, nu)).trace();
}

Operator marginal_rep(const DihedralRep& rep, int nu) {
    const Dim d = rep.dim;
    Operator S = Operator::Zero(d.value(), d.value());
    for (int a = 0; a < d.value(); ++a) S += rep_element(rep, ModInt(a, d), nu);
    return S / static_cast<double>(d.value());
}

}  // namespace hwp
