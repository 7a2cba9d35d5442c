#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"

namespace hwp {

// Abstract element (alpha, beta, gamma, nu) of the Heisenberg-Weyl-parity
// group, independent of any matrix. nu = 0 elements form the Heisenberg-Weyl
// subset. Residues are kept canonical in [0, d); equality is tuple equality.
struct HWPElement {
    ModInt alpha, beta, gamma;
    int nu;  // 0 or 1

    Dim dim() const { return alpha.modulus(); }
    bool operator==(const HWPElement& o) const {
        return alpha == o.alpha && beta == o.beta && gamma == o.gamma && nu == o.nu;
    }
};

HWPElement hwp_element(Dim d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma, int nu);
HWPElement hwp_identity(Dim d);

// (a1,b1,c1,n1)(a2,b2,c2,n2) = (a1 + (-1)^{n1} a2, b1 + (-1)^{n1} b2,
//  c1 + c2 + 2^{-1} (-1)^{n1} (a1 b2 - a2 b1), n1 + n2)
HWPElement hwp_mul(const HWPElement& g1, const HWPElement& g2);
// ((-1)^{nu+1} alpha, (-1)^{nu+1} beta, -gamma, nu)
HWPElement hwp_inv(const HWPElement& g);
// Smallest k >= 1 with g^k = identity; divides 2d always, divides d when
// nu = 0, and lies in {1, 2} when nu = 1 and gamma = 0.
int hwp_order(const HWPElement& g);
// Group commutator g1 g2 g1^{-1} g2^{-1}.
HWPElement hwp_group_commutator(const HWPElement& g1, const HWPElement& g2);

// Matrix bridge: the displacement-parity operator of g.
Operator to_operator(const HWPElement& g);

// Abstract dihedral element (a, nu): R(a1,n1) R(a2,n2) = R(a1 + (-1)^{n1} a2, n1+n2).
struct DihedralElement {
    ModInt a;
    int nu;

    Dim dim() const { return a.modulus(); }
    bool operator==(const DihedralElement& o) const { return a == o.a && nu == o.nu; }
};

DihedralElement dihedral_element(Dim d, std::int64_t a, int nu);
DihedralElement dihedral_mul(const DihedralElement& e1, const DihedralElement& e2);
DihedralElement dihedral_inv(const DihedralElement& e);
// Rotation-axis embedding (a, nu) -> (a, 0, 0, nu) of the dihedral group in
// the Heisenberg-Weyl-parity group.
HWPElement embed_dihedral(const DihedralElement& e);

// Commutator closed forms. The first-kind commutator of general elements is a
// pure Heisenberg-Weyl element D(A, B, Gamma); its ingredients live in LoopArea.
struct LoopArea {
    ModInt A, B, Gamma;  // commutator = D(A, B, Gamma)
    int lambda;          // sign in Gamma = lambda (a1 b2 - a2 b1); +1 iff nu1 = nu2 = 0
    ModInt Phi;          // two-loop exponent; 0 unless built from a pair of loops
};
LoopArea loop_area(const HWPElement& g1, const HWPElement& g2);

// area form A(x1,nu1 | x2,nu2) = x1 nu2 - x2 nu1
ModInt area_form(const ModInt& x1, int nu1, const ModInt& x2, int nu2);

// Commutator of two nu = 0 elements: the phase D(0, 0, a1 b2 - a2 b1).
// Independent of the gammas. Requires nu = 0 on both inputs.
HWPElement commutator_hw(const HWPElement& g1, const HWPElement& g2);
// Commutator in the dihedral group: Z-power 2 (nu2 a1 - nu1 a2).
DihedralElement commutator_dihedral(const DihedralElement& e1, const DihedralElement& e2);
// Commutator of general elements: D(A, B, Gamma) with A = 2(a1 n2 - a2 n1),
// B = 2(b1 n2 - b2 n1), Gamma = lambda (a1 b2 - a2 b1). Lands in nu = 0.
HWPElement commutator_hwp(const HWPElement& g1, const HWPElement& g2);
// Commutator of two first-kind commutators, omega(Phi) 1 with
// Phi = 4 [A(a1,n1|a2,n2) A(b3,n3|b4,n4) - A(a3,n3|a4,n4) A(b1,n1|b2,n2)].
Phase commutator2_hwp(const HWPElement& g1, const HWPElement& g2, const HWPElement& g3,
                      const HWPElement& g4);

// |<f| L(g1,g2) |f>| for the first-kind commutator loop; f must be unit norm.
double loop_overlap(const Ket& f, const HWPElement& g1, const HWPElement& g2);

// A finite subgroup as a sorted list of canonical tuples. `closed` records
// that closure under products and inverses has been established.
struct GroupClosure {
    Dim dim;
    std::vector<HWPElement> elements;    // sorted by (nu, gamma, beta, alpha) packing
    std::vector<HWPElement> generators;
    bool closed = false;

    std::size_t size() const { return elements.size(); }
    bool contains(const HWPElement& g) const;
};

// Breadth-first closure of the generated subgroup; deterministic sorted output.
GroupClosure close_group(Dim d, std::vector<HWPElement> generators);
// Wrap an explicit element set, verifying closure (flag reflects the outcome).
GroupClosure group_from_elements(Dim d, std::vector<HWPElement> elements);

GroupClosure hwp_group(Dim d);       // all 2d^3 elements
GroupClosure hw_group(Dim d);        // nu = 0 subgroup, d^3 elements
GroupClosure dihedral_group_z(Dim d);  // (a, 0, 0, nu) subgroup, 2d elements
GroupClosure phase_subgroup(Dim d);  // (0, 0, gamma, 0) center elements, d of them

// Derived series G > [G,G] > ... > {1}; throws if the closure flag is unset
// ("closure not established") or d > 9.
std::vector<GroupClosure> derived_series(const GroupClosure& group);
std::vector<std::size_t> derived_series_sizes(const GroupClosure& group);

struct LowerCentralResult {
    std::vector<GroupClosure> series;
    bool nilpotent;        // true iff the series reaches {1}
    std::size_t stable_size;  // size at which the series stopped shrinking
};
LowerCentralResult lower_central_series(const GroupClosure& group);

struct SemidirectReport {
    bool hw_normal = false;            // HW(d) normal in HWP(d)
    bool parity_z2 = false;            // {1, P} is a Z(2) subgroup
    bool unique_factorization = false; // g = (HW part) * P^nu uniquely
    bool trivial_intersection = false; // HW(d) meets {1, P} in {1}
    bool dihedral_analog = false;      // same four checks for Z(d) x| Z(2)
    bool pass() const {
        return hw_normal && parity_z2 && unique_factorization && trivial_intersection &&
               dihedral_analog;
    }
};
// Exhaustive structure checks, d <= 9. corrupt_table is a test hook that
// damages one entry of the multiplication table used by the normality check.
SemidirectReport semidirect_checks(Dim d, bool corrupt_table = false);

}  // namespace hwp
