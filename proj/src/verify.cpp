#include "hwpkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "hwpkit/dihedral.hpp"
#include "hwpkit/frames.hpp"
#include "hwpkit/group.hpp"
#include "hwpkit/noise.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"
#include "hwpkit/wigner_weyl.hpp"
#include "json.hpp"

namespace hwp {

namespace {

constexpr double kTol = 1e-10;        // full-precision identities
constexpr double kProductTol = 1e-9;  // convolution products vs matrix oracle
constexpr double kStrobeTol = 1e-8;

class Suite {
public:
    explicit Suite(std::string name) { report_.suite = std::move(name); }

    void add(std::string name, int d, double deviation, double tolerance,
             std::string detail = "") {
        IdentityResult r;
        r.name = std::move(name);
        r.d = d;
        r.max_deviation = deviation;
        r.tolerance = tolerance;
        r.pass = deviation <= tolerance;
        r.detail = std::move(detail);
        report_.identities.push_back(std::move(r));
    }

    void add_flag(std::string name, int d, bool ok, std::string detail = "") {
        add(std::move(name), d, ok ? 0.0 : 1.0, 0.0, std::move(detail));
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

std::int64_t rand_residue(UniformStream& s, int d) {
    auto r = static_cast<std::int64_t>(s.next_unit() * d);
    return r >= d ? d - 1 : r;
}

int rand_bit(UniformStream& s) { return s.next_unit() < 0.5 ? 0 : 1; }

Operator random_operator(Dim d, UniformStream& s) {
    Operator m(d.value(), d.value());
    for (int r = 0; r < d.value(); ++r)
        for (int c = 0; c < d.value(); ++c)
            m(r, c) = std::complex<double>(2.0 * s.next_unit() - 1.0, 2.0 * s.next_unit() - 1.0);
    return m;
}

Operator random_hermitian(Dim d, UniformStream& s) {
    const Operator m = random_operator(d, s);
    return (m + Operator(m.adjoint())) / 2.0;
}

Ket random_ket(Dim d, UniformStream& s) {
    Ket v(d.value());
    for (int r = 0; r < d.value(); ++r)
        v(r) = std::complex<double>(2.0 * s.next_unit() - 1.0, 2.0 * s.next_unit() - 1.0);
    return v;
}

Fiducial random_fiducial(Dim d, UniformStream& s) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Ket v = random_ket(d, s);
        const double n = v.norm();
        if (n < 1e-6) continue;
        try {
            return validate_fiducial(v / n);
        } catch (const std::invalid_argument&) {
            continue;  // drew a degenerate direction; essentially never happens
        }
    }
    throw std::runtime_error("could not draw a generic fiducial in 100 attempts");
}

HWPElement random_element(Dim d, UniformStream& s, bool zero_gamma = false) {
    return hwp_element(d, rand_residue(s, d.value()), rand_residue(s, d.value()),
                       zero_gamma ? 0 : rand_residue(s, d.value()), rand_bit(s));
}

Operator matrix_power(const Operator& m, int e) {
    Operator acc = Operator::Identity(m.rows(), m.cols());
    for (int k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

std::string sizes_detail(const std::vector<std::size_t>& sizes) {
    std::string out = "sizes=[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes[i]);
    }
    return out + ']';
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const IdentityResult& r) { return r.pass; });
}

bool all_pass(const std::vector<SuiteReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const SuiteReport& r) { return r.all_pass(); });
}

SuiteReport verify_operators(const VerifyOptions& options) {
    Suite suite("operators");
    UniformStream stream(options.seed, 0, 0xA11CE);
    for (const int dv : options.dims) {
        const Dim d(dv);
        const std::int64_t h = d.half();
        const Operator F = fourier(d);
        const Operator P = parity(d);
        const Operator I = identity_op(d);

        // Z^a X^b = omega(ab) X^b Z^a
        double dev = 0.0;
        for (std::int64_t a = 0; a < dv; ++a)
            for (std::int64_t b = 0; b < dv; ++b)
                dev = std::max(dev, max_abs_diff(clock_z(ModInt(a, d)) * shift_x(ModInt(b, d)),
                                                 omega(d, a * b) * shift_x(ModInt(b, d)) *
                                                     clock_z(ModInt(a, d))));
        suite.add("weyl-commutation", dv, dev, kTol);

        suite.add("fourier-unitary", dv, max_abs_diff(F * F.adjoint(), I), kTol);
        suite.add("fourier-squared-parity", dv,
                  std::max(max_abs_diff(F * F, P), max_abs_diff(matrix_power(F, 4), I)), kTol);

        double factor_dev = 0.0, unitary_dev = 0.0, action_x_dev = 0.0, action_p_dev = 0.0;
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t a = -h; a <= h; ++a)
                for (std::int64_t b = -h; b <= h; ++b)
                    for (std::int64_t g = -h; g <= h; ++g) {
                        const Operator M = dp_operator(d, a, b, g, nu);
                        factor_dev =
                            std::max(factor_dev, max_abs_diff(M, dp_factor_product(d, a, b, g, nu)));
                        unitary_dev = std::max(unitary_dev,
                                               max_abs_diff(Operator(M.adjoint() * M), I));
                        for (std::int64_t j = -h; j <= h; ++j) {
                            const BasisAction ax = dp_action_position(d, a, b, g, nu, j);
                            Ket want = omega(d, ax.phase_exponent) * position_ket(d, ax.label);
                            action_x_dev = std::max(
                                action_x_dev,
                                (M * position_ket(d, j) - want).cwiseAbs().maxCoeff());
                            const BasisAction ap = dp_action_momentum(d, a, b, g, nu, j);
                            want = omega(d, ap.phase_exponent) * momentum_ket(d, ap.label);
                            action_p_dev = std::max(
                                action_p_dev,
                                (M * momentum_ket(d, j) - want).cwiseAbs().maxCoeff());
                        }
                    }
        suite.add("displacement-factorization", dv, factor_dev, kTol);
        suite.add("displacement-unitarity", dv, unitary_dev, kTol);
        suite.add("basis-action-position", dv, action_x_dev, kTol);
        suite.add("basis-action-momentum", dv, action_p_dev, kTol);

        double invol_dev = 0.0, par_conj_dev = 0.0, clock_conj_dev = 0.0, shift_conj_dev = 0.0;
        double xshift_dev = 0.0, pshift_dev = 0.0, trace_dev = 0.0;
        const Operator xop = position_op(d);
        const Operator pop = momentum_op(d);
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                const Operator Pab = displaced_parity(d, a, b);
                invol_dev = std::max(invol_dev, max_abs_diff(Pab * Pab, I));
                const Operator Dm = displacement(d, a, b, 0);
                par_conj_dev =
                    std::max(par_conj_dev, max_abs_diff(P * Dm * P, displacement(d, -a, -b, 0)));
                clock_conj_dev = std::max(
                    clock_conj_dev, max_abs_diff(Dm * clock_z(ModInt(1, d)) * Dm.adjoint(),
                                                 omega(d, -b) * clock_z(ModInt(1, d))));
                shift_conj_dev = std::max(
                    shift_conj_dev, max_abs_diff(Dm * shift_x(ModInt(1, d)) * Dm.adjoint(),
                                                 omega(d, a) * shift_x(ModInt(1, d))));
                // position and momentum are angular (mod-d) quantities: a
                // displacement shifts their spectra with centered reduction
                Operator xsh = Operator::Zero(dv, dv);
                Operator pdiag = Operator::Zero(dv, dv);
                for (std::int64_t j = -h; j <= h; ++j) {
                    xsh(centered_index(d, j), centered_index(d, j)) = centered_residue(d, j - b);
                    pdiag(centered_index(d, j), centered_index(d, j)) = centered_residue(d, j - a);
                }
                xshift_dev = std::max(xshift_dev, max_abs_diff(Dm * xop * Dm.adjoint(), xsh));
                pshift_dev = std::max(pshift_dev, max_abs_diff(Dm * pop * Dm.adjoint(),
                                                               F * pdiag * F.adjoint()));
                for (int nu = 0; nu < 2; ++nu) {
                    const std::complex<double> tr = dp_operator(d, a, b, 0, nu).trace();
                    const bool origin = centered_residue(d, a) == 0 && centered_residue(d, b) == 0;
                    const double want = origin ? (nu == 0 ? dv : 1.0) : (nu == 1 ? 1.0 : 0.0);
                    trace_dev = std::max(trace_dev, std::abs(tr - want));
                }
            }
        suite.add("displaced-parity-involution", dv, invol_dev, kTol);
        suite.add("parity-conjugation", dv, par_conj_dev, kTol);
        suite.add("clock-conjugation", dv, clock_conj_dev, kTol);
        suite.add("shift-conjugation", dv, shift_conj_dev, kTol);
        suite.add("position-spectrum-shift", dv, xshift_dev, kTol);
        suite.add("momentum-spectrum-shift", dv, pshift_dev, kTol);
        suite.add("displaced-parity-trace", dv, trace_dev, kTol);

        const auto [pi0, pi1] = parity_projectors(d);
        double proj_dev = std::max(max_abs_diff(pi0 * pi0, pi0), max_abs_diff(pi1 * pi1, pi1));
        proj_dev = std::max(proj_dev, max_abs_diff(pi0 * pi1, Operator::Zero(dv, dv)));
        proj_dev = std::max(proj_dev, max_abs_diff(pi0 + pi1, I));
        proj_dev = std::max(proj_dev, std::abs(pi0.trace() - std::complex<double>((dv + 1) / 2)));
        proj_dev = std::max(proj_dev, std::abs(pi1.trace() - std::complex<double>((dv - 1) / 2)));
        suite.add("parity-projector-algebra", dv, proj_dev, kTol);

        double strobe_dev = 0.0, herm_dev = 0.0;
        for (int k = 0; k < 5; ++k) {
            const Operator U = dp_operator(d, rand_residue(stream, dv), rand_residue(stream, dv),
                                           rand_residue(stream, dv), rand_bit(stream));
            const Operator ham = principal_log_hamiltonian(U);
            herm_dev = std::max(herm_dev, max_abs_diff(ham, ham.adjoint()));
            strobe_dev = std::max(
                strobe_dev, max_abs_diff(evolve(ham, 2.0 * std::numbers::pi / dv), U));
        }
        suite.add("principal-log-strobe", dv, strobe_dev, kStrobeTol);
        suite.add("principal-log-hermitian", dv, herm_dev, kTol);

        const DihedralRep zrep{Axis::Z, d};
        const DihedralRep xrep{Axis::X, d};
        double rep_dev = 0.0;
        for (std::int64_t a1 = 0; a1 < dv; ++a1)
            for (int n1 = 0; n1 < 2; ++n1)
                for (std::int64_t a2 = 0; a2 < dv; ++a2)
                    for (int n2 = 0; n2 < 2; ++n2) {
                        const DihedralElement e1 = dihedral_element(d, a1, n1);
                        const DihedralElement e2 = dihedral_element(d, a2, n2);
                        const DihedralElement pr = dihedral_mul(e1, e2);
                        rep_dev = std::max(rep_dev,
                                           max_abs_diff(rep_element(zrep, e1) * rep_element(zrep, e2),
                                                        rep_element(zrep, pr)));
                        rep_dev = std::max(rep_dev,
                                           max_abs_diff(rep_element(xrep, e1) * rep_element(xrep, e2),
                                                        rep_element(xrep, pr)));
                    }
        for (std::int64_t a = 0; a < dv; ++a)
            for (int nu = 0; nu < 2; ++nu) {
                const DihedralElement e = dihedral_element(d, a, nu);
                const Operator Zr = rep_element(zrep, e);
                rep_dev = std::max(rep_dev,
                                   max_abs_diff(Zr, F * rep_element(xrep, e) * F.adjoint()));
                rep_dev = std::max(rep_dev, max_abs_diff(matrix_power(Zr, 2 * dv), I));
                rep_dev = std::max(
                    rep_dev, max_abs_diff(Zr.adjoint(), rep_element(zrep, dihedral_inv(e))));
            }
        suite.add("dihedral-rep-law", dv, rep_dev, kTol);
    }
    return suite.take();
}

SuiteReport verify_group(const VerifyOptions& options) {
    Suite suite("group");
    UniformStream stream(options.seed, 0, 0xB0B);
    for (const int dv : options.group_dims) {
        const Dim d(dv);
        const GroupClosure full = hwp_group(d);

        bool assoc_ok = true;
        for (int k = 0; k < 200; ++k) {
            const HWPElement g1 = random_element(d, stream);
            const HWPElement g2 = random_element(d, stream);
            const HWPElement g3 = random_element(d, stream);
            assoc_ok = assoc_ok && hwp_mul(hwp_mul(g1, g2), g3) == hwp_mul(g1, hwp_mul(g2, g3));
        }
        suite.add_flag("associativity", dv, assoc_ok);

        bool inverse_ok = true;
        for (const HWPElement& g : full.elements)
            inverse_ok = inverse_ok && hwp_mul(g, hwp_inv(g)) == hwp_identity(d) &&
                         hwp_mul(hwp_inv(g), g) == hwp_identity(d);
        double inv_matrix_dev = 0.0;
        for (int k = 0; k < 50; ++k) {
            const HWPElement g = random_element(d, stream);
            inv_matrix_dev = std::max(
                inv_matrix_dev,
                max_abs_diff(to_operator(hwp_inv(g)), to_operator(g).adjoint()));
        }
        suite.add_flag("inverse-law", dv, inverse_ok && inv_matrix_dev <= kTol);

        double hom_dev = 0.0;
        for (int k = 0; k < 200; ++k) {
            const HWPElement g1 = random_element(d, stream);
            const HWPElement g2 = random_element(d, stream);
            hom_dev = std::max(hom_dev, max_abs_diff(to_operator(hwp_mul(g1, g2)),
                                                     to_operator(g1) * to_operator(g2)));
        }
        suite.add("homomorphism", dv, hom_dev, kTol);

        bool order_ok = true;
        for (const HWPElement& g : full.elements) {
            const int o = hwp_order(g);
            order_ok = order_ok && (2 * dv) % o == 0;
            if (g.nu == 0) order_ok = order_ok && dv % o == 0;
            if (g.nu == 1 && g.gamma.value() == 0) order_ok = order_ok && (o == 1 || o == 2);
        }
        suite.add_flag("order-laws", dv, order_ok);

        bool hw_comm_ok = true;
        for (std::int64_t a1 = 0; a1 < dv; ++a1)
            for (std::int64_t b1 = 0; b1 < dv; ++b1)
                for (std::int64_t a2 = 0; a2 < dv; ++a2)
                    for (std::int64_t b2 = 0; b2 < dv; ++b2) {
                        const HWPElement g1 =
                            hwp_element(d, a1, b1, rand_residue(stream, dv), 0);
                        const HWPElement g2 =
                            hwp_element(d, a2, b2, rand_residue(stream, dv), 0);
                        hw_comm_ok = hw_comm_ok &&
                                     commutator_hw(g1, g2) == hwp_group_commutator(g1, g2);
                    }
        suite.add_flag("hw-commutator", dv, hw_comm_ok);

        bool dih_comm_ok = true;
        for (std::int64_t a1 = 0; a1 < dv; ++a1)
            for (int n1 = 0; n1 < 2; ++n1)
                for (std::int64_t a2 = 0; a2 < dv; ++a2)
                    for (int n2 = 0; n2 < 2; ++n2) {
                        const DihedralElement e1 = dihedral_element(d, a1, n1);
                        const DihedralElement e2 = dihedral_element(d, a2, n2);
                        const DihedralElement got = commutator_dihedral(e1, e2);
                        const DihedralElement want = dihedral_mul(
                            dihedral_mul(e1, e2),
                            dihedral_inv(dihedral_mul(e2, e1)));
                        dih_comm_ok = dih_comm_ok && got == want;
                        // the embedding must commute with taking commutators
                        dih_comm_ok = dih_comm_ok &&
                                      embed_dihedral(got) ==
                                          hwp_group_commutator(embed_dihedral(e1),
                                                               embed_dihedral(e2));
                    }
        suite.add_flag("dihedral-commutator", dv, dih_comm_ok);

        bool hwp_comm_ok = true;
        for (std::int64_t a1 = 0; a1 < dv; ++a1)
            for (std::int64_t b1 = 0; b1 < dv; ++b1)
                for (int n1 = 0; n1 < 2; ++n1)
                    for (std::int64_t a2 = 0; a2 < dv; ++a2)
                        for (std::int64_t b2 = 0; b2 < dv; ++b2)
                            for (int n2 = 0; n2 < 2; ++n2) {
                                const HWPElement g1 =
                                    hwp_element(d, a1, b1, rand_residue(stream, dv), n1);
                                const HWPElement g2 =
                                    hwp_element(d, a2, b2, rand_residue(stream, dv), n2);
                                hwp_comm_ok =
                                    hwp_comm_ok &&
                                    commutator_hwp(g1, g2) == hwp_group_commutator(g1, g2);
                            }
        double comm_matrix_dev = 0.0;
        for (int k = 0; k < 50; ++k) {
            const HWPElement g1 = random_element(d, stream);
            const HWPElement g2 = random_element(d, stream);
            const Operator m1 = to_operator(g1);
            const Operator m2 = to_operator(g2);
            comm_matrix_dev = std::max(
                comm_matrix_dev,
                max_abs_diff(to_operator(commutator_hwp(g1, g2)),
                             m1 * m2 * m1.adjoint() * m2.adjoint()));
        }
        suite.add_flag("hwp-commutator", dv, hwp_comm_ok && comm_matrix_dev <= kTol);

        bool double_ok = true;
        double double_matrix_dev = 0.0;
        for (int k = 0; k < 100; ++k) {
            const HWPElement g1 = random_element(d, stream, /*zero_gamma=*/true);
            const HWPElement g2 = random_element(d, stream, true);
            const HWPElement g3 = random_element(d, stream, true);
            const HWPElement g4 = random_element(d, stream, true);
            const Phase phi = commutator2_hwp(g1, g2, g3, g4);
            const HWPElement got = hwp_group_commutator(hwp_group_commutator(g1, g2),
                                                        hwp_group_commutator(g3, g4));
            double_ok = double_ok &&
                        got == hwp_element(d, 0, 0, phi.exponent().value(), 0);
            if (k < 10) {
                const Operator m1 = to_operator(g1), m2 = to_operator(g2);
                const Operator m3 = to_operator(g3), m4 = to_operator(g4);
                const Operator c12 = m1 * m2 * m1.adjoint() * m2.adjoint();
                const Operator c34 = m3 * m4 * m3.adjoint() * m4.adjoint();
                double_matrix_dev = std::max(
                    double_matrix_dev,
                    max_abs_diff(c12 * c34 * c12.adjoint() * c34.adjoint(),
                                 phi.value() * identity_op(d)));
            }
        }
        suite.add_flag("double-commutator", dv, double_ok && double_matrix_dev <= kTol);

        const auto hwp_sizes = derived_series_sizes(full);
        const std::vector<std::size_t> hwp_want = {
            2 * static_cast<std::size_t>(dv) * dv * dv, static_cast<std::size_t>(dv) * dv * dv,
            static_cast<std::size_t>(dv), 1};
        suite.add_flag("derived-series", dv, hwp_sizes == hwp_want, sizes_detail(hwp_sizes));

        const GroupClosure hw = hw_group(d);
        const auto hw_sizes = derived_series_sizes(hw);
        const std::vector<std::size_t> hw_want = {static_cast<std::size_t>(dv) * dv * dv,
                                                  static_cast<std::size_t>(dv), 1};
        suite.add_flag("hw-derived-series", dv, hw_sizes == hw_want, sizes_detail(hw_sizes));

        const auto dih_sizes = derived_series_sizes(dihedral_group_z(d));
        const std::vector<std::size_t> dih_want = {2 * static_cast<std::size_t>(dv),
                                                   static_cast<std::size_t>(dv), 1};
        suite.add_flag("dihedral-derived-series", dv, dih_sizes == dih_want,
                       sizes_detail(dih_sizes));

        const LowerCentralResult lc = lower_central_series(full);
        const LowerCentralResult lch = lower_central_series(hw);
        const bool lc_ok = !lc.nilpotent &&
                           lc.stable_size == static_cast<std::size_t>(dv) * dv * dv &&
                           lch.nilpotent;
        suite.add_flag("lower-central", dv, lc_ok,
                       "stable_size=" + std::to_string(lc.stable_size));

        suite.add_flag("semidirect", dv, semidirect_checks(d).pass());

        bool tyu_ok = true;
        const auto check_tyu = [&](const HWPElement& f, const HWPElement& g,
                                   const HWPElement& hh) {
            const auto c = [](const HWPElement& x, const HWPElement& y) {
                return hwp_group_commutator(x, y);
            };
            bool ok = hwp_inv(c(g, hh)) == c(hh, g);
            ok = ok && hwp_mul(hwp_mul(c(g, hh), hh), g) == hwp_mul(g, hh);
            const HWPElement t = hwp_mul(
                hwp_mul(c(f, hwp_mul(g, hh)), c(g, hwp_mul(hh, f))), c(hh, hwp_mul(f, g)));
            return ok && t == hwp_identity(d);
        };
        if (dv == 3) {
            for (std::int64_t a1 = 0; a1 < 3; ++a1)
                for (int n1 = 0; n1 < 2; ++n1)
                    for (std::int64_t a2 = 0; a2 < 3; ++a2)
                        for (int n2 = 0; n2 < 2; ++n2)
                            for (std::int64_t a3 = 0; a3 < 3; ++a3)
                                for (int n3 = 0; n3 < 2; ++n3)
                                    tyu_ok = tyu_ok &&
                                             check_tyu(hwp_element(d, a1, 0, 0, n1),
                                                       hwp_element(d, a2, 0, 0, n2),
                                                       hwp_element(d, a3, 0, 0, n3));
        }
        for (int k = 0; k < 200; ++k)
            tyu_ok = tyu_ok && check_tyu(random_element(d, stream), random_element(d, stream),
                                         random_element(d, stream));
        suite.add_flag("tyu-identities", dv, tyu_ok);
    }
    return suite.take();
}

SuiteReport verify_frames(const VerifyOptions& options) {
    Suite suite("frames");
    UniformStream stream(options.seed, 0, 0xF4A3);
    for (const int dv : options.dims) {
        const Dim d(dv);
        const Operator I = identity_op(d);

        double res_dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            const Fiducial fid = random_fiducial(d, stream);
            res_dev = std::max(
                res_dev, max_abs_diff(frame_operator(build_frame(FrameKind::HW, fid)), I));
            res_dev = std::max(
                res_dev, max_abs_diff(frame_operator(build_frame(FrameKind::HWP, fid)), I));
        }
        suite.add("frame-resolution", dv, res_dev, kTol);

        const Fiducial fid = random_fiducial(d, stream);
        const CoherentFrame hw = build_frame(FrameKind::HW, fid);
        const CoherentFrame hwp = build_frame(FrameKind::HWP, fid);

        double closure_dev = 0.0;
        for (int k = 0; k < 5; ++k) {
            const HWPElement g = random_element(d, stream);
            closure_dev = std::max(closure_dev,
                                   displacement_closure_check(hwp, g).max_deviation);
            const HWPElement g0 = hwp_element(d, g.alpha.value(), g.beta.value(),
                                              g.gamma.value(), 0);
            closure_dev = std::max(closure_dev,
                                   displacement_closure_check(hw, g0).max_deviation);
        }
        suite.add("displacement-closure", dv, closure_dev, kTol);

        const FourierCheckReport fr = frame_fourier_check(hwp);
        suite.add("frame-fourier", dv,
                  std::max({fr.max_deviation, fr.coeff_deviation, fr.involution_deviation}),
                  kTol);

        const Ket f = random_ket(d, stream);
        const Ket g2 = random_ket(d, stream);
        double round_dev =
            (reconstruct(hw, bargmann(hw, f)) - f).cwiseAbs().maxCoeff();
        round_dev = std::max(round_dev,
                             (reconstruct(hwp, bargmann(hwp, f)) - f).cwiseAbs().maxCoeff());
        suite.add("bargmann-roundtrip", dv, round_dev, kTol);

        const std::complex<double> direct = g2.dot(f);  // conjugates the first argument
        double sp_dev =
            std::abs(scalar_product_via_bargmann(bargmann(hw, g2), bargmann(hw, f)) - direct);
        sp_dev = std::max(sp_dev, std::abs(scalar_product_via_bargmann(bargmann(hwp, g2),
                                                                       bargmann(hwp, f)) -
                                           direct));
        suite.add("bargmann-scalar-product", dv, sp_dev, kTol);

        double ov_dev = 0.0;
        for (int k = 0; k < 100; ++k) {
            const FrameIndex i1{centered_residue(d, rand_residue(stream, dv)),
                                centered_residue(d, rand_residue(stream, dv)), rand_bit(stream)};
            const FrameIndex i2{centered_residue(d, rand_residue(stream, dv)),
                                centered_residue(d, rand_residue(stream, dv)), rand_bit(stream)};
            const FrameIndex h1{i1.alpha, i1.beta, 0};
            const FrameIndex h2{i2.alpha, i2.beta, 0};
            ov_dev = std::max(ov_dev,
                              std::abs(overlap(hwp, i1, i2) -
                                       std::norm(hwp.state(i1).dot(hwp.state(i2)))));
            ov_dev = std::max(
                ov_dev, std::abs(overlap(hw, h1, h2) - std::norm(hw.state(h1).dot(hw.state(h2)))));
        }
        suite.add("overlap-closed-form", dv, ov_dev, kTol);

        bool reject_ok = true;
        const auto expect_reject = [&](const Ket& v) {
            try {
                validate_fiducial(v);
                return false;
            } catch (const std::invalid_argument&) {
                return true;
            }
        };
        reject_ok = reject_ok && expect_reject(position_ket(d, 1));
        reject_ok = reject_ok && expect_reject(momentum_ket(d, 1));
        Ket even = random_ket(d, stream);
        even = even + Ket(parity(d) * even);
        reject_ok = reject_ok && expect_reject(even / even.norm());
        reject_ok = reject_ok && expect_reject(1.1 * fid.state());
        suite.add_flag("fiducial-rejection", dv, reject_ok);
    }
    return suite.take();
}

SuiteReport verify_ww(const VerifyOptions& options) {
    Suite suite("ww");
    UniformStream stream(options.seed, 0, 0x33D1);
    for (const int dv : options.dims) {
        const Dim d(dv);
        const std::int64_t h = d.half();
        const std::int64_t i2 = two_inverse_value(d);

        double uf_dev = 0.0;
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t g = -h; g <= h; ++g)
                for (std::int64_t dl = -h; dl <= h; ++dl)
                    uf_dev = std::max(
                        uf_dev,
                        max_abs_diff(
                            dp_fourier_dual(d, g, dl, nu, options.flip_unified_fourier_sign),
                            dp_operator(d, g, dl, 0, nu + 1)));
        suite.add("unified-fourier", dv, uf_dev, kTol);

        const Operator theta = random_operator(d, stream);
        const WWTable table = unified_ww(theta);

        const WWTable ft = ww_fourier(table);
        double tf_dev = 0.0;
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t a = -h; a <= h; ++a)
                for (std::int64_t b = -h; b <= h; ++b)
                    tf_dev = std::max(tf_dev, std::abs(ft.at(a, b, nu) - table.at(a, b, nu)));
        WWTable arbitrary(d);
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t a = -h; a <= h; ++a)
                for (std::int64_t b = -h; b <= h; ++b)
                    arbitrary.at(a, b, nu) = std::complex<double>(2.0 * stream.next_unit() - 1.0,
                                                                  2.0 * stream.next_unit() - 1.0);
        const WWTable twice = ww_fourier(ww_fourier(arbitrary));
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t a = -h; a <= h; ++a)
                for (std::int64_t b = -h; b <= h; ++b)
                    tf_dev = std::max(tf_dev,
                                      std::abs(twice.at(a, b, nu) - arbitrary.at(a, b, nu)));
        suite.add("table-fourier", dv, tf_dev, kTol);

        double restr_dev = 0.0;
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                restr_dev = std::max(restr_dev, std::abs(table.at(a, b, 0) - weyl(theta, a, b)));
                restr_dev = std::max(restr_dev,
                                     std::abs(table.at(a, b, 1) - wigner(theta, i2 * a, i2 * b)));
            }
        suite.add("wigner-weyl-restriction", dv, restr_dev, kTol);

        double axis_dev = 0.0;
        for (int nu = 0; nu < 2; ++nu)
            for (std::int64_t a = -h; a <= h; ++a) {
                axis_dev = std::max(axis_dev, std::abs(table.at(a, 0, nu) -
                                                       wz_function(theta, ModInt(a, d), nu)));
                axis_dev = std::max(axis_dev, std::abs(table.at(0, a, nu) -
                                                       wx_function(theta, ModInt(a, d), nu)));
            }
        suite.add("axis-restriction", dv, axis_dev, kTol);

        double dm_dev = 0.0;
        const Ket x0 = position_ket(d, 0);
        const Ket p0 = momentum_ket(d, 0);
        for (int nu = 0; nu < 2; ++nu) {
            std::complex<double> acc = 0.0;
            std::complex<double> accx = 0.0;
            for (std::int64_t a = 0; a < dv; ++a) {
                acc += wz_function(theta, ModInt(a, d), nu);
                accx += wx_function(theta, ModInt(a, d), nu);
            }
            dm_dev = std::max(dm_dev,
                              std::abs(acc / static_cast<double>(dv) -
                                       (x0.adjoint() * theta * x0).value()));
            dm_dev = std::max(dm_dev,
                              std::abs(accx / static_cast<double>(dv) -
                                       (p0.adjoint() * theta * p0).value()));
            dm_dev = std::max(dm_dev, max_abs_diff(marginal_rep(DihedralRep{Axis::Z, d}, nu),
                                                   x0 * x0.adjoint()));
            dm_dev = std::max(dm_dev, max_abs_diff(marginal_rep(DihedralRep{Axis::X, d}, nu),
                                                   p0 * p0.adjoint()));
        }
        suite.add("dihedral-marginal", dv, dm_dev, kTol);

        double pair_dev = 0.0;
        for (std::int64_t g = -h; g <= h; ++g)
            for (std::int64_t dl = -h; dl <= h; ++dl) {
                Operator acc = Operator::Zero(dv, dv);
                for (std::int64_t a = -h; a <= h; ++a)
                    for (std::int64_t b = -h; b <= h; ++b)
                        acc += displacement(d, a, b, 0) * omega(d, b * g - a * dl);
                pair_dev = std::max(pair_dev, max_abs_diff(acc / static_cast<double>(dv),
                                                           displaced_parity(d, g, dl)));
                Operator back = Operator::Zero(dv, dv);
                for (std::int64_t a = -h; a <= h; ++a)
                    for (std::int64_t b = -h; b <= h; ++b)
                        back += displaced_parity(d, a, b) * omega(d, -(dl * a) + g * b);
                pair_dev = std::max(pair_dev, max_abs_diff(back / static_cast<double>(dv),
                                                           displacement(d, g, dl, 0)));
            }
        suite.add("hw-fourier-pair", dv, pair_dev, kTol);

        double de_dev =
            max_abs_diff(resum_displacements(expand_displacements(theta)), theta);
        const PhaseGrid single = expand_displacements(displacement(d, 1, 1, 0));
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                const std::complex<double> want =
                    (centered_residue(d, a - 1) == 0 && centered_residue(d, b - 1) == 0) ? 1.0
                                                                                         : 0.0;
                de_dev = std::max(de_dev, std::abs(single.at(a, b) - want));
            }
        suite.add("displacement-expansion", dv, de_dev, kTol);

        const Operator herm = random_hermitian(d, stream);
        suite.add("parity-expansion", dv,
                  max_abs_diff(resum_parities(expand_parities(herm)), herm), kTol);

        double ue_dev = 0.0;
        for (const double lambda : {0.0, 0.3, 0.5, 0.7, 1.0})
            ue_dev = std::max(ue_dev,
                              max_abs_diff(resum_unified(expand_unified(theta, lambda)), theta));
        suite.add("unified-expansion", dv, ue_dev, kTol);

        const Operator theta2 = random_operator(d, stream);
        const Operator product = theta * theta2;
        double wc_dev = 0.0;
        {
            const PhaseGrid got = weyl_convolution(weyl_grid(theta), weyl_grid(theta2));
            const PhaseGrid want = weyl_grid(product);
            wc_dev = (got.raw() - want.raw()).cwiseAbs().maxCoeff();
        }
        suite.add("weyl-convolution", dv, wc_dev, kProductTol);

        double ms_dev = 0.0;
        {
            const PhaseGrid got = moyal_star(wigner_grid(theta), wigner_grid(theta2));
            const PhaseGrid want = wigner_grid(product);
            ms_dev = (got.raw() - want.raw()).cwiseAbs().maxCoeff();
        }
        suite.add("moyal-star", dv, ms_dev, kProductTol);

        {
            const Operator theta3 = random_operator(d, stream);
            const PhaseGrid w1 = wigner_grid(theta);
            const PhaseGrid w2 = wigner_grid(theta2);
            const PhaseGrid w3 = wigner_grid(theta3);
            const PhaseGrid left = moyal_star(moyal_star(w1, w2), w3);
            const PhaseGrid right = moyal_star(w1, moyal_star(w2, w3));
            suite.add("moyal-associativity", dv,
                      (left.raw() - right.raw()).cwiseAbs().maxCoeff(), 1e-8);
        }

        double up_dev = 0.0;
        {
            const WWTable got = unified_product(table, unified_ww(theta2));
            const WWTable want = unified_ww(product);
            for (int nu = 0; nu < 2; ++nu)
                for (std::int64_t a = -h; a <= h; ++a)
                    for (std::int64_t b = -h; b <= h; ++b)
                        up_dev = std::max(up_dev,
                                          std::abs(got.at(a, b, nu) - want.at(a, b, nu)));
        }
        suite.add("unified-product", dv, up_dev, kProductTol);

        suite.add("marginal-identities", dv, marginals(theta).max_deviation(), kTol);
        suite.add("dp-orthogonality", dv, dp_orthogonality_deviation(d), kTol);

        Operator traced = random_operator(d, stream);
        if (std::abs(traced.trace()) < 0.5) traced += identity_op(d);
        suite.add("dp-resolution", dv, dp_resolution_deviation(d, traced), kTol);

        double real_dev = 0.0;
        const WWTable herm_table = unified_ww(herm);
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b)
                real_dev = std::max(real_dev, std::abs(herm_table.at(a, b, 1).imag()));
        suite.add("hermitian-wigner-real", dv, real_dev, kTol);

        double xp_dev = 0.0;
        for (std::int64_t j = -h; j <= h; ++j) {
            const Ket xj = position_ket(d, j);
            const WWTable tw = unified_ww(Operator(xj * xj.adjoint()));
            for (int nu = 0; nu < 2; ++nu) {
                const std::int64_t s = (nu == 0) ? 1 : -1;
                for (std::int64_t a = -h; a <= h; ++a)
                    for (std::int64_t b = -h; b <= h; ++b) {
                        const bool hit = centered_residue(d, b - 2 * nu * j) == 0;
                        const std::complex<double> want =
                            hit ? omega(d, i2 * a * b + a * j * s) : 0.0;
                        xp_dev = std::max(xp_dev, std::abs(tw.at(a, b, nu) - want));
                    }
            }
        }
        suite.add("x-projector-closed-form", dv, xp_dev, kTol);
    }
    return suite.take();
}

std::vector<SuiteReport> verify_all(const VerifyOptions& options) {
    return {verify_operators(options), verify_group(options), verify_frames(options),
            verify_ww(options)};
}

std::vector<std::string> identity_manifest() {
    return {
        "associativity",
        "axis-restriction",
        "bargmann-roundtrip",
        "bargmann-scalar-product",
        "basis-action-momentum",
        "basis-action-position",
        "clock-conjugation",
        "derived-series",
        "dihedral-commutator",
        "dihedral-derived-series",
        "dihedral-marginal",
        "dihedral-rep-law",
        "displaced-parity-involution",
        "displaced-parity-trace",
        "displacement-closure",
        "displacement-expansion",
        "displacement-factorization",
        "displacement-unitarity",
        "double-commutator",
        "dp-orthogonality",
        "dp-resolution",
        "fiducial-rejection",
        "fourier-squared-parity",
        "fourier-unitary",
        "frame-fourier",
        "frame-resolution",
        "hermitian-wigner-real",
        "homomorphism",
        "hw-commutator",
        "hw-derived-series",
        "hw-fourier-pair",
        "hwp-commutator",
        "inverse-law",
        "lower-central",
        "marginal-identities",
        "momentum-spectrum-shift",
        "moyal-associativity",
        "moyal-star",
        "order-laws",
        "overlap-closed-form",
        "parity-conjugation",
        "parity-expansion",
        "parity-projector-algebra",
        "position-spectrum-shift",
        "principal-log-hermitian",
        "principal-log-strobe",
        "semidirect",
        "shift-conjugation",
        "table-fourier",
        "tyu-identities",
        "unified-expansion",
        "unified-fourier",
        "unified-product",
        "weyl-commutation",
        "weyl-convolution",
        "wigner-weyl-restriction",
        "x-projector-closed-form",
    };
}

std::string verify_report_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteReport& report : reports) {
        nlohmann::json identities = nlohmann::json::array();
        for (const IdentityResult& r : report.identities) {
            nlohmann::json item;
            item["name"] = r.name;
            item["d"] = r.d;
            item["max_deviation"] = r.max_deviation;
            item["tolerance"] = r.tolerance;
            item["pass"] = r.pass;
            if (!r.detail.empty()) item["detail"] = r.detail;
            identities.push_back(std::move(item));
        }
        nlohmann::json s;
        s["suite"] = report.suite;
        s["all_pass"] = report.all_pass();
        s["identities"] = std::move(identities);
        suites.push_back(std::move(s));
    }
    nlohmann::json j;
    j["suites"] = std::move(suites);
    j["manifest"] = identity_manifest();
    j["all_pass"] = all_pass(reports);
    return j.dump(2);
}

}  // namespace hwp
