#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hwpkit/group.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"

namespace hwp {

enum class FrameKind { HW, HWP };

struct GenericityReport {
    double norm_deviation;         // | ||s||^2 - 1 | of the input before renormalization
    double max_position_overlap;   // max_j |<X;j|s>|
    double max_momentum_overlap;   // max_j |<P;j|s>|
    double even_weight;            // ||even-projector s||
    double odd_weight;             // ||odd-projector s||
};

// A validated fiducial: stored unit-normalized, with the genericity report of
// the checks it passed. Genericity tolerance is eps = 1e-6 throughout.
class Fiducial {
public:
    const Ket& state() const { return state_; }
    const GenericityReport& report() const { return report_; }
    Dim dim() const { return dim_; }

private:
    friend Fiducial validate_fiducial(const Ket& s);
    Fiducial(Dim d, Ket s, GenericityReport r) : dim_(d), state_(std::move(s)), report_(r) {}
    Dim dim_;
    Ket state_;
    GenericityReport report_;
};

// Accepts any state within 2% of unit norm (stored renormalized) that is not
// position-like, momentum-like, or a parity eigenstate; otherwise throws
// naming the violated condition.
Fiducial validate_fiducial(const Ket& s);

struct FrameIndex {
    std::int64_t alpha, beta;  // centered display values
    int nu;                    // always 0 for HW frames
};

// The d^2 (HW) or 2d^2 (HWP) coherent states DP(alpha, beta, 0, nu)|s>.
// Index order is nu-major, then alpha, then beta, ascending centered.
class CoherentFrame {
public:
    FrameKind kind() const { return kind_; }
    Dim dim() const { return fiducial_.dim(); }
    const Fiducial& fiducial() const { return fiducial_; }
    std::size_t size() const { return states_.size(); }

    int flat_index(std::int64_t alpha, std::int64_t beta, int nu) const;
    const Ket& state(std::int64_t alpha, std::int64_t beta, int nu = 0) const;
    const Ket& state(const FrameIndex& idx) const { return state(idx.alpha, idx.beta, idx.nu); }
    std::vector<FrameIndex> indices() const;

private:
    friend CoherentFrame build_frame(FrameKind kind, const Fiducial& fiducial);
    CoherentFrame(FrameKind k, Fiducial f) : kind_(k), fiducial_(std::move(f)) {}
    FrameKind kind_;
    Fiducial fiducial_;
    std::vector<Ket> states_;
};

CoherentFrame build_frame(FrameKind kind, const Fiducial& fiducial);

// (1/d) sum |C><C| (HW) or (1/2d) sum |C><C| (HWP); equals the identity.
Operator frame_operator(const CoherentFrame& frame);

// Bargmann coefficients F(alpha,beta,nu) = <C;alpha,beta,nu|f> over the frame
// grid, same index order as the frame.
class BargmannTable {
public:
    BargmannTable(FrameKind kind, Dim d);
    FrameKind kind() const { return kind_; }
    Dim dim() const { return dim_; }
    std::size_t size() const { return coeff_.size(); }

    std::complex<double>& at(std::int64_t alpha, std::int64_t beta, int nu = 0);
    const std::complex<double>& at(std::int64_t alpha, std::int64_t beta, int nu = 0) const;
    const std::vector<std::complex<double>>& raw() const { return coeff_; }
    std::vector<std::complex<double>>& raw() { return coeff_; }

private:
    FrameKind kind_;
    Dim dim_;
    std::vector<std::complex<double>> coeff_;
};

BargmannTable bargmann(const CoherentFrame& frame, const Ket& f);

// |f> = (1/d) sum F |C> (HW) or (1/2d) sum F |C> (HWP).
Ket reconstruct(const CoherentFrame& frame, const BargmannTable& table);

// <g|f> = (1/d) sum conj(G) F (HW) or (1/2d) sum conj(G) F (HWP).
std::complex<double> scalar_product_via_bargmann(const BargmannTable& table_g,
                                                 const BargmannTable& table_f);

// Q = |F|^2, same index order.
std::vector<double> q_function(const BargmannTable& table);

// |<C;idx1|C;idx2>|^2 via the closed-form single sum over fiducial components.
double overlap(const CoherentFrame& frame, const FrameIndex& idx1, const FrameIndex& idx2);

// The overlap value all distinct pairs would share if the frame were
// equiangular: 1/(d+1) for HW, (2d-1)/(2d^2-1) for HWP. Value only.
double sic_overlap_target(Dim d, FrameKind kind);

struct ClosureReport {
    double max_deviation;  // worst |lhs - omega(Gamma) |C;A,B,nu1+nu2>| over the frame
};
// Verifies g |C;a,b,nu> = omega(Gamma) |C;A,B,nu_g+nu> against direct matrix
// action for every frame state.
ClosureReport displacement_closure_check(const CoherentFrame& frame, const HWPElement& g);

struct FourierCheckReport {
    double max_deviation;      // worst ket deviation of the frame transform
    double coeff_deviation;    // worst Bargmann-coefficient deviation
    double involution_deviation;  // worst deviation after applying the transform twice
};
// (1/d) sum_{a,b} omega(2^{-1}(b gamma - a delta)) |C;a,b,nu> = |C;gamma,delta,nu+1>.
// The kernel carries the same sign for both nu; see the comment in frames.cpp.
// flip_kernel_sign is a fault-injection hook for verification tests.
FourierCheckReport frame_fourier_check(const CoherentFrame& frame, bool flip_kernel_sign = false);

// Built-in reference states for the bundled demonstrations, tabulated for
// d = 3 and d = 5 (other d throw std::invalid_argument).  The fiducial is
// unit-normalized; the analyzed state is kept exactly as tabulated, which
// leaves it slightly off unit norm.
Ket reference_fiducial(Dim d);
Ket reference_state(Dim d);

}  // namespace hwp
