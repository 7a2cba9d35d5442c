#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <tuple>

#include "hwpkit/frames.hpp"
#include "hwpkit/group.hpp"
#include "hwpkit/io.hpp"
#include "hwpkit/noise.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"
#include "hwpkit/verify.hpp"
#include "hwpkit/wigner_weyl.hpp"

namespace py = pybind11;

namespace {

using Element = std::tuple<std::int64_t, std::int64_t, std::int64_t, int>;

hwp::HWPElement from_tuple(hwp::Dim d, const Element& t) {
    return hwp::hwp_element(d, std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t));
}

Element to_tuple(const hwp::HWPElement& g) {
    return {g.alpha.value(), g.beta.value(), g.gamma.value(), g.nu};
}

hwp::FrameKind kind_from(const std::string& kind) {
    if (kind == "HW") return hwp::FrameKind::HW;
    if (kind == "HWP") return hwp::FrameKind::HWP;
    throw std::invalid_argument("frame kind must be \"HW\" or \"HWP\", got \"" + kind + '"');
}

// Tables cross to python as complex arrays shaped (nu, alpha, beta) with the
// labels in ascending centered order, so values[nu, i, j] holds the entry at
// alpha = i - (d-1)/2, beta = j - (d-1)/2.
py::array_t<std::complex<double>> table_to_array(const hwp::WWTable& table) {
    const int d = table.dim().value();
    const std::int64_t h = table.dim().half();
    py::array_t<std::complex<double>> out({2, d, d});
    auto view = out.mutable_unchecked<3>();
    for (int nu = 0; nu < 2; ++nu)
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b)
                view(nu, static_cast<py::ssize_t>(a + h), static_cast<py::ssize_t>(b + h)) =
                    table.at(a, b, nu);
    return out;
}

hwp::WWTable table_from_array(const py::array_t<std::complex<double>>& values) {
    const auto view = values.unchecked<3>();
    if (view.shape(0) != 2 || view.shape(1) != view.shape(2))
        throw std::invalid_argument("expected a table shaped (2, d, d)");
    const hwp::Dim d(static_cast<int>(view.shape(1)));
    const std::int64_t h = d.half();
    hwp::WWTable table(d);
    for (int nu = 0; nu < 2; ++nu)
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b)
                table.at(a, b, nu) =
                    view(nu, static_cast<py::ssize_t>(a + h), static_cast<py::ssize_t>(b + h));
    return table;
}

}  // namespace

PYBIND11_MODULE(_hwpkit, m) {
    m.doc() =
        "displacement-parity operators, group closures, doubled coherent frames, "
        "unified phase-space tables, and frame-noise experiments";

    m.def(
        "clock_z", [](int d) { return hwp::clock_z(hwp::ModInt(1, hwp::Dim(d))); },
        py::arg("d"), "diagonal order-d generator");
    m.def(
        "shift_x", [](int d) { return hwp::shift_x(hwp::ModInt(1, hwp::Dim(d))); },
        py::arg("d"), "cyclic shift generator");
    m.def(
        "fourier", [](int d) { return hwp::fourier(hwp::Dim(d)); }, py::arg("d"),
        "discrete Fourier unitary");
    m.def(
        "parity", [](int d) { return hwp::parity(hwp::Dim(d)); }, py::arg("d"),
        "label-reversal unitary, the square of the Fourier matrix");
    m.def(
        "dp_operator",
        [](int d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma, int nu) {
            return hwp::dp_operator(hwp::Dim(d), alpha, beta, gamma, nu);
        },
        py::arg("d"), py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 0,
        py::arg("nu") = 0, "displacement-parity word as a matrix");
    m.def("principal_log_hamiltonian", &hwp::principal_log_hamiltonian, py::arg("u"),
          "Hermitian generator with eigenphases on the principal branch");
    m.def("evolve", &hwp::evolve, py::arg("h"), py::arg("t"),
          "exp(i h t) through the spectral decomposition");

    m.def(
        "hwp_mul",
        [](int d, const Element& g1, const Element& g2) {
            const hwp::Dim dim(d);
            return to_tuple(hwp::hwp_mul(from_tuple(dim, g1), from_tuple(dim, g2)));
        },
        py::arg("d"), py::arg("g1"), py::arg("g2"),
        "compose two (alpha, beta, gamma, nu) labels");
    m.def(
        "hwp_inv",
        [](int d, const Element& g) { return to_tuple(hwp::hwp_inv(from_tuple(hwp::Dim(d), g))); },
        py::arg("d"), py::arg("g"));
    m.def(
        "hwp_order",
        [](int d, const Element& g) { return hwp::hwp_order(from_tuple(hwp::Dim(d), g)); },
        py::arg("d"), py::arg("g"));
    m.def(
        "hwp_commutator",
        [](int d, const Element& g1, const Element& g2) {
            const hwp::Dim dim(d);
            return to_tuple(
                hwp::hwp_group_commutator(from_tuple(dim, g1), from_tuple(dim, g2)));
        },
        py::arg("d"), py::arg("g1"), py::arg("g2"));
    m.def(
        "to_matrix",
        [](int d, const Element& g) { return hwp::to_operator(from_tuple(hwp::Dim(d), g)); },
        py::arg("d"), py::arg("g"), "matrix of an (alpha, beta, gamma, nu) label");
    m.def(
        "derived_series_sizes",
        [](int d, const std::string& group) {
            const hwp::Dim dim(d);
            const hwp::GroupClosure closure = group == "HW"   ? hwp::hw_group(dim)
                                              : group == "DZ" ? hwp::dihedral_group_z(dim)
                                                              : hwp::hwp_group(dim);
            return hwp::derived_series_sizes(closure);
        },
        py::arg("d"), py::arg("group") = "HWP");
    m.def(
        "semidirect_pass",
        [](int d) { return hwp::semidirect_checks(hwp::Dim(d)).pass(); }, py::arg("d"));

    m.def(
        "reference_fiducial", [](int d) { return hwp::reference_fiducial(hwp::Dim(d)); },
        py::arg("d"), "built-in unit fiducial, tabulated for d in {3, 5}");
    m.def(
        "reference_state", [](int d) { return hwp::reference_state(hwp::Dim(d)); }, py::arg("d"),
        "built-in analyzed state, tabulated for d in {3, 5}");
    m.def(
        "bargmann_table",
        [](const std::string& kind, const hwp::Ket& s, const hwp::Ket& f) {
            const hwp::FrameKind k = kind_from(kind);
            const hwp::CoherentFrame frame = hwp::build_frame(k, hwp::validate_fiducial(s));
            const hwp::BargmannTable coeffs = hwp::bargmann(frame, f);
            const int d = frame.dim().value();
            const std::int64_t h = frame.dim().half();
            const int slices = k == hwp::FrameKind::HW ? 1 : 2;
            py::array_t<std::complex<double>> out({slices, d, d});
            auto view = out.mutable_unchecked<3>();
            for (int nu = 0; nu < slices; ++nu)
                for (std::int64_t a = -h; a <= h; ++a)
                    for (std::int64_t b = -h; b <= h; ++b)
                        view(nu, static_cast<py::ssize_t>(a + h),
                             static_cast<py::ssize_t>(b + h)) = coeffs.at(a, b, nu);
            return out;
        },
        py::arg("kind"), py::arg("fiducial"), py::arg("state"),
        "overlap coefficients of the state against the frame, shaped (nu, alpha, beta)");
    m.def(
        "reconstruct_state",
        [](const std::string& kind, const hwp::Ket& s, const hwp::Ket& f) {
            const hwp::CoherentFrame frame =
                hwp::build_frame(kind_from(kind), hwp::validate_fiducial(s));
            return hwp::reconstruct(frame, hwp::bargmann(frame, f));
        },
        py::arg("kind"), py::arg("fiducial"), py::arg("state"),
        "resolution-of-identity round trip; equals the input state");
    m.def(
        "frame_operator",
        [](const std::string& kind, const hwp::Ket& s) {
            return hwp::frame_operator(
                hwp::build_frame(kind_from(kind), hwp::validate_fiducial(s)));
        },
        py::arg("kind"), py::arg("fiducial"),
        "normalized sum of the frame projectors; equals the identity");

    m.def(
        "unified_table", [](const hwp::Operator& theta) { return table_to_array(hwp::unified_ww(theta)); },
        py::arg("theta"), "both-sector phase-space table, shaped (2, d, d)");
    m.def(
        "expansion_coefficients",
        [](const hwp::Operator& theta, double lam) {
            return table_to_array(hwp::expand_unified(theta, lam));
        },
        py::arg("theta"), py::arg("lam") = 0.5,
        "word-expansion coefficients of the operator for one mixing weight");
    m.def(
        "resum_table",
        [](const py::array_t<std::complex<double>>& coefficients) {
            return hwp::resum_unified(table_from_array(coefficients));
        },
        py::arg("coefficients"), "operator rebuilt from its expansion coefficients");
    m.def(
        "ww_fourier_table",
        [](const py::array_t<std::complex<double>>& values) {
            return table_to_array(hwp::ww_fourier(table_from_array(values)));
        },
        py::arg("values"), "self-inverse phase-space transform of a table");
    m.def(
        "marginal_max_deviation",
        [](const hwp::Operator& theta) { return hwp::marginals(theta).max_deviation(); },
        py::arg("theta"), "worst deviation over the marginal identities");

    m.def(
        "noise_experiment",
        [](int d, double amplitude, int trials, std::uint64_t seed, bool complex_noise) {
            hwp::NoiseConfig cfg;
            cfg.amplitude = amplitude;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.kind =
                complex_noise ? hwp::NoiseKind::ComplexUniform : hwp::NoiseKind::RealUniform;
            const hwp::ExperimentResult r = hwp::run_experiment(
                hwp::reference_fiducial(hwp::Dim(d)), hwp::reference_state(hwp::Dim(d)), cfg);
            py::dict out;
            out["mean_e1"] = r.hw.mean;
            out["std_e1"] = r.hw.stddev;
            out["mean_e2"] = r.hwp.mean;
            out["std_e2"] = r.hwp.stddev;
            out["e2_lt_e1"] = r.e2_lt_e1;
            return out;
        },
        py::arg("d"), py::arg("amplitude") = 0.1, py::arg("trials") = 1000, py::arg("seed") = 7,
        py::arg("complex_noise") = false,
        "mean recovery error of both frames under fiducial perturbations");

    m.def(
        "verify_pass",
        [](const std::string& suite, int d, std::uint64_t seed) {
            hwp::VerifyOptions options;
            options.seed = seed;
            if (d != 0) {
                options.dims = {d};
                if (d <= 5)
                    options.group_dims = {d};
                else
                    options.group_dims.clear();
            }
            std::vector<hwp::SuiteReport> reports;
            if (suite == "all")
                reports = hwp::verify_all(options);
            else if (suite == "operators")
                reports = {hwp::verify_operators(options)};
            else if (suite == "group")
                reports = {hwp::verify_group(options)};
            else if (suite == "frames")
                reports = {hwp::verify_frames(options)};
            else if (suite == "ww")
                reports = {hwp::verify_ww(options)};
            else
                throw std::invalid_argument("unknown suite \"" + suite + '"');
            return hwp::all_pass(reports);
        },
        py::arg("suite") = "all", py::arg("d") = 0, py::arg("seed") = 7,
        "run an identity battery; true iff every named identity passes");
    m.def("identity_manifest", &hwp::identity_manifest,
          "every identity name the batteries can emit");
}
