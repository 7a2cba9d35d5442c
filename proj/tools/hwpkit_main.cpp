#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hwpkit/dihedral.hpp"
#include "hwpkit/frames.hpp"
#include "hwpkit/group.hpp"
#include "hwpkit/io.hpp"
#include "hwpkit/noise.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"
#include "hwpkit/verify.hpp"
#include "hwpkit/wigner_weyl.hpp"

namespace {

using nlohmann::json;

int check_odd_dim(int d) {
    if (d < 3 || d % 2 == 0) {
        std::cerr << "error: --d must be odd and >= 3, got " << d << '\n';
        return 2;
    }
    return 0;
}

// Files always carry full precision; a missing --out streams to stdout, where
// --round switches to fixed-point presentation.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

std::string matrix_text(const hwp::Operator& op, int round_digits) {
    std::string text;
    char buf[80];
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
        for (Eigen::Index c = 0; c < op.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.*f%+.*fi", round_digits, op(r, c).real(),
                          round_digits, op(r, c).imag());
            if (c) text += "  ";
            text += buf;
        }
        text += '\n';
    }
    return text;
}

void emit_matrix(const hwp::Operator& op, const std::string& out_path, int round_digits) {
    if (!out_path.empty())
        hwp::save_matrix_file(out_path, op);
    else if (round_digits >= 0)
        std::cout << matrix_text(op, round_digits);
    else
        std::cout << hwp::dump_matrix(op) << '\n';
}

struct OpsArgs {
    int d = 3;
    std::string dump;
    std::string load;
    std::int64_t alpha = 0, beta = 0, gamma = 0;
    int nu = 0;
    std::string out;
    int round = -1;
};

int run_ops(const OpsArgs& a) {
    if (int rc = check_odd_dim(a.d)) return rc;
    if (a.dump.empty() == a.load.empty()) {
        std::cerr << "error: ops needs exactly one of --dump or --load\n";
        return 2;
    }
    const hwp::Dim d(a.d);
    hwp::Operator m;
    if (!a.load.empty()) {
        m = hwp::load_matrix_file(a.load);
    } else if (a.dump == "Z") {
        m = hwp::clock_z(hwp::ModInt(1, d));
    } else if (a.dump == "X") {
        m = hwp::shift_x(hwp::ModInt(1, d));
    } else if (a.dump == "F") {
        m = hwp::fourier(d);
    } else if (a.dump == "P") {
        m = hwp::parity(d);
    } else {  // D: the general displacement-parity word
        m = hwp::dp_operator(d, a.alpha, a.beta, a.gamma, a.nu);
    }
    emit_matrix(m, a.out, a.round);
    return 0;
}

struct GroupArgs {
    int d = 3;
    std::string group = "HWP";
    std::string out;
};

int run_group(const GroupArgs& a) {
    if (int rc = check_odd_dim(a.d)) return rc;
    const hwp::Dim d(a.d);
    const auto n = static_cast<std::size_t>(a.d);

    hwp::GroupClosure closure = a.group == "HW"   ? hwp::hw_group(d)
                                : a.group == "DZ" ? hwp::dihedral_group_z(d)
                                                  : hwp::hwp_group(d);
    const auto sizes = hwp::derived_series_sizes(closure);
    const hwp::LowerCentralResult lc = hwp::lower_central_series(closure);

    bool pass = false;
    json checks;
    checks["lower_central_stable_size"] = lc.stable_size;
    if (a.group == "HWP") {
        const hwp::SemidirectReport sd = hwp::semidirect_checks(d);
        checks["hw_normal"] = sd.hw_normal;
        checks["parity_z2"] = sd.parity_z2;
        checks["unique_factorization"] = sd.unique_factorization;
        checks["trivial_intersection"] = sd.trivial_intersection;
        checks["dihedral_analog"] = sd.dihedral_analog;
        pass = sd.pass() && !lc.nilpotent && lc.stable_size == n * n * n &&
               sizes == std::vector<std::size_t>{2 * n * n * n, n * n * n, n, 1};
    } else if (a.group == "HW") {
        pass = lc.nilpotent && sizes == std::vector<std::size_t>{n * n * n, n, 1};
    } else {
        pass = sizes == std::vector<std::size_t>{2 * n, n, 1};
    }

    json j;
    j["group"] = a.group;
    j["d"] = a.d;
    j["order"] = closure.size();
    j["derived_series_sizes"] = sizes;
    j["nilpotent"] = lc.nilpotent;
    j["checks"] = std::move(checks);
    j["pass"] = pass;
    emit(j.dump(2), a.out);
    return pass ? 0 : 1;
}

struct DihedralArgs {
    int d = 3;
    std::string axis = "Z";
    std::int64_t a = 1;
    int nu = 0;
    bool marginal = false;
    std::string out;
    int round = -1;
};

int run_dihedral(const DihedralArgs& a) {
    if (int rc = check_odd_dim(a.d)) return rc;
    const hwp::Dim d(a.d);
    const hwp::DihedralRep rep{a.axis == "X" ? hwp::Axis::X : hwp::Axis::Z, d};
    const hwp::Operator m = a.marginal ? hwp::marginal_rep(rep, a.nu)
                                       : hwp::rep_element(rep, hwp::ModInt(a.a, d), a.nu);
    emit_matrix(m, a.out, a.round);
    return 0;
}

struct FrameArgs {
    int d = 3;
    std::string kind = "HWP";
    std::string fiducial;
    std::string state;
    std::string format = "csv";
    std::string out;
    int round = -1;
};

int run_frame(const FrameArgs& a) {
    if (int rc = check_odd_dim(a.d)) return rc;
    const hwp::Dim d(a.d);
    const hwp::Ket s =
        a.fiducial.empty() ? hwp::reference_fiducial(d) : hwp::load_ket_file(a.fiducial);
    const hwp::Fiducial fid = hwp::validate_fiducial(s);
    const hwp::FrameKind kind = a.kind == "HW" ? hwp::FrameKind::HW : hwp::FrameKind::HWP;
    const hwp::CoherentFrame frame = hwp::build_frame(kind, fid);

    if (a.format == "json") {
        const hwp::GenericityReport rep = fid.report();
        json j;
        j["kind"] = a.kind;
        j["d"] = a.d;
        j["size"] = frame.size();
        j["norm_deviation"] = rep.norm_deviation;
        j["max_position_overlap"] = rep.max_position_overlap;
        j["max_momentum_overlap"] = rep.max_momentum_overlap;
        j["even_weight"] = rep.even_weight;
        j["odd_weight"] = rep.odd_weight;
        j["sic_overlap_target"] = hwp::sic_overlap_target(d, kind);
        emit(j.dump(2), a.out);
        return 0;
    }
    const hwp::Ket f = a.state.empty() ? hwp::reference_state(d) : hwp::load_ket_file(a.state);
    const hwp::BargmannTable coeffs = hwp::bargmann(frame, f);
    emit(hwp::bargmann_csv(coeffs, a.out.empty() ? a.round : -1), a.out);
    return 0;
}

struct WwArgs {
    std::string operator_file;
    bool transform = false;
    bool marginals = false;
    std::string format = "csv";
    std::string out;
    int round = -1;
};

int run_ww(const WwArgs& a) {
    const hwp::Operator theta = hwp::load_matrix_file(a.operator_file);
    if (theta.rows() < 3 || theta.rows() % 2 == 0) {
        std::cerr << "error: operator dimension must be odd and >= 3, got " << theta.rows()
                  << '\n';
        return 2;
    }
    if (a.marginals) {
        const hwp::MarginalReport rep = hwp::marginals(theta);
        json j;
        j["row_deviation"] = rep.row_deviation;
        j["column_deviation"] = rep.column_deviation;
        j["slice_deviation"] = rep.slice_deviation;
        j["even_sector_deviation"] = rep.even_sector_deviation;
        j["odd_sector_deviation"] = rep.odd_sector_deviation;
        j["operator_sum_deviation"] = rep.operator_sum_deviation;
        j["max_deviation"] = rep.max_deviation();
        j["pass"] = rep.pass();
        emit(j.dump(2), a.out);
        return rep.pass() ? 0 : 1;
    }
    hwp::WWTable table = hwp::unified_ww(theta);
    if (a.transform) table = hwp::ww_fourier(table);
    if (a.format == "json")
        emit(hwp::dump_table(table), a.out);
    else
        emit(hwp::ww_csv(table, a.out.empty() ? a.round : -1), a.out);
    return 0;
}

struct NoiseArgs {
    int d = 3;
    double amplitude = 0.1;
    int trials = 10000;
    std::uint64_t seed = 7;
    bool complex_noise = false;
    std::string fiducial;
    std::string state;
    std::string out;
};

int run_noise(const NoiseArgs& a) {
    if (int rc = check_odd_dim(a.d)) return rc;
    const hwp::Dim d(a.d);
    const hwp::Ket s =
        a.fiducial.empty() ? hwp::reference_fiducial(d) : hwp::load_ket_file(a.fiducial);
    const hwp::Ket f = a.state.empty() ? hwp::reference_state(d) : hwp::load_ket_file(a.state);

    hwp::NoiseConfig cfg;
    cfg.amplitude = a.amplitude;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.kind = a.complex_noise ? hwp::NoiseKind::ComplexUniform : hwp::NoiseKind::RealUniform;
    const hwp::ExperimentResult result = hwp::run_experiment(s, f, cfg);

    json j;
    j["d"] = a.d;
    j["amplitude"] = cfg.amplitude;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["noise"] = hwp::to_string(cfg.kind);
    j["mean_e1"] = result.hw.mean;
    j["std_e1"] = result.hw.stddev;
    j["mean_e2"] = result.hwp.mean;
    j["std_e2"] = result.hwp.stddev;
    j["max_closed_form_gap"] =
        std::max(result.hw.max_closed_form_gap, result.hwp.max_closed_form_gap);
    j["e2_lt_e1"] = result.e2_lt_e1;
    emit(j.dump(2), a.out);
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int d = 0;  // 0: the full default battery
    std::uint64_t seed = 7;
    bool break_unified_fourier = false;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    hwp::VerifyOptions options;
    options.seed = a.seed;
    options.flip_unified_fourier_sign = a.break_unified_fourier;
    if (a.d != 0) {
        if (int rc = check_odd_dim(a.d)) return rc;
        if (a.d > 7) {
            std::cerr << "error: the verification battery covers d in {3, 5, 7}\n";
            return 2;
        }
        options.dims = {a.d};
        if (a.d <= 5) {
            options.group_dims = {a.d};
        } else if (a.suite == "group") {
            std::cerr << "error: group series run exhaustively for d in {3, 5}\n";
            return 2;
        } else {
            options.group_dims.clear();
        }
    }

    std::vector<hwp::SuiteReport> reports;
    if (a.suite == "all")
        reports = hwp::verify_all(options);
    else if (a.suite == "operators")
        reports = {hwp::verify_operators(options)};
    else if (a.suite == "group")
        reports = {hwp::verify_group(options)};
    else if (a.suite == "frames")
        reports = {hwp::verify_frames(options)};
    else
        reports = {hwp::verify_ww(options)};

    char buf[64];
    for (const hwp::SuiteReport& report : reports) {
        std::size_t passed = 0;
        for (const hwp::IdentityResult& r : report.identities) passed += r.pass ? 1 : 0;
        std::cout << "suite " << report.suite << ": " << passed << '/'
                  << report.identities.size() << " pass\n";
        for (const hwp::IdentityResult& r : report.identities) {
            std::snprintf(buf, sizeof(buf), "%.3g", r.max_deviation);
            std::cout << (r.pass ? "  ok   " : "  FAIL ") << r.name << " d=" << r.d
                      << " dev=" << buf;
            std::snprintf(buf, sizeof(buf), "%.3g", r.tolerance);
            std::cout << " tol=" << buf;
            if (!r.detail.empty()) std::cout << ' ' << r.detail;
            std::cout << '\n';
        }
    }
    const bool ok = hwp::all_pass(reports);
    std::cout << (ok ? "verify: all identities pass" : "verify: FAILURES above") << '\n';
    if (!a.out.empty()) emit(hwp::verify_report_json(reports), a.out);
    return ok ? 0 : 1;
}

struct Table1Args {
    int d = 3;
    std::string out;
    int round = -1;
};

int run_table1(const Table1Args& a) {
    if (a.d != 3) {
        std::cerr << "error: the reference table is tabulated for d = 3\n";
        return 2;
    }
    const hwp::Dim d(3);
    const hwp::Ket s = hwp::reference_fiducial(d);
    const hwp::Ket f = hwp::reference_state(d);
    const hwp::CoherentFrame frame =
        hwp::build_frame(hwp::FrameKind::HWP, hwp::validate_fiducial(s));
    const hwp::BargmannTable coeffs = hwp::bargmann(frame, f);
    const hwp::WWTable table = hwp::unified_ww(hwp::Operator(f * f.adjoint()));
    emit(hwp::table1_csv(coeffs, table, a.out.empty() ? a.round : -1), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hwpkit: displacement-parity operators, their group closures, doubled coherent "
        "frames, unified phase-space tables, and frame-noise experiments"};
    app.require_subcommand(1);

    OpsArgs ops;
    CLI::App* ops_cmd = app.add_subcommand("ops", "construct or round-trip operator matrices");
    ops_cmd->add_option("--d", ops.d, "odd dimension >= 3");
    ops_cmd->add_option("--dump", ops.dump, "one of Z, X, F, P, D")
        ->check(CLI::IsMember({"Z", "X", "F", "P", "D"}));
    ops_cmd->add_option("--load", ops.load, "re-emit a matrix from a JSON file");
    ops_cmd->add_option("--alpha", ops.alpha, "displacement label (with --dump D)");
    ops_cmd->add_option("--beta", ops.beta, "displacement label (with --dump D)");
    ops_cmd->add_option("--gamma", ops.gamma, "phase label (with --dump D)");
    ops_cmd->add_option("--nu", ops.nu, "parity bit (with --dump D)")->check(CLI::Range(0, 1));
    ops_cmd->add_option("--out", ops.out, "write JSON here instead of stdout");
    ops_cmd->add_option("--round", ops.round, "console presentation digits");

    GroupArgs group;
    CLI::App* group_cmd = app.add_subcommand("group", "exhaustive group closure and series");
    group_cmd->add_option("--d", group.d, "odd dimension >= 3 (series capped at d <= 9)");
    group_cmd->add_option("--group", group.group, "HWP, HW, or DZ")
        ->check(CLI::IsMember({"HWP", "HW", "DZ"}));
    group_cmd->add_option("--out", group.out, "write the JSON report here");

    DihedralArgs dihedral;
    CLI::App* dihedral_cmd =
        app.add_subcommand("dihedral", "dihedral subgroup representation matrices");
    dihedral_cmd->add_option("--d", dihedral.d, "odd dimension >= 3");
    dihedral_cmd->add_option("--axis", dihedral.axis, "Z or X")
        ->check(CLI::IsMember({"Z", "X"}));
    dihedral_cmd->add_option("--a", dihedral.a, "rotation label");
    dihedral_cmd->add_option("--nu", dihedral.nu, "parity bit")->check(CLI::Range(0, 1));
    dihedral_cmd->add_flag("--marginal", dihedral.marginal,
                           "emit the rank-one group average instead of an element");
    dihedral_cmd->add_option("--out", dihedral.out, "write JSON here instead of stdout");
    dihedral_cmd->add_option("--round", dihedral.round, "console presentation digits");

    FrameArgs frame;
    CLI::App* frame_cmd =
        app.add_subcommand("frame", "coherent frames and overlap coefficient tables");
    frame_cmd->add_option("--d", frame.d, "odd dimension >= 3");
    frame_cmd->add_option("--kind", frame.kind, "HW (plain) or HWP (doubled)")
        ->check(CLI::IsMember({"HW", "HWP"}));
    frame_cmd->add_option("--fiducial", frame.fiducial,
                          "fiducial ket JSON (default: built-in reference, d in {3,5})");
    frame_cmd->add_option("--state", frame.state,
                          "analyzed ket JSON (default: built-in reference, d in {3,5})");
    frame_cmd->add_option("--format", frame.format, "csv (coefficients) or json (frame report)")
        ->check(CLI::IsMember({"csv", "json"}));
    frame_cmd->add_option("--out", frame.out, "write here instead of stdout");
    frame_cmd->add_option("--round", frame.round, "console presentation digits");

    WwArgs ww;
    CLI::App* ww_cmd = app.add_subcommand("ww", "unified phase-space table of an operator");
    ww_cmd->add_option("--operator", ww.operator_file, "operator matrix JSON file")->required();
    ww_cmd->add_flag("--transform", ww.transform, "apply the phase-space transform first");
    ww_cmd->add_flag("--marginals", ww.marginals, "emit the marginal-identity report instead");
    ww_cmd->add_option("--format", ww.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    ww_cmd->add_option("--out", ww.out, "write here instead of stdout");
    ww_cmd->add_option("--round", ww.round, "console presentation digits");

    NoiseArgs noise;
    CLI::App* noise_cmd =
        app.add_subcommand("noise", "frame-comparison noise experiment (mean recovery error)");
    noise_cmd->add_option("--d", noise.d, "3 or 5 with the built-in reference states");
    noise_cmd->add_option("--amplitude", noise.amplitude, "perturbation amplitude E");
    noise_cmd->add_option("--trials", noise.trials, "number of independent trials")
        ->check(CLI::PositiveNumber);
    noise_cmd->add_option("--seed", noise.seed, "stream seed");
    noise_cmd->add_flag("--complex", noise.complex_noise, "perturb with complex amplitudes");
    noise_cmd->add_option("--fiducial", noise.fiducial, "fiducial ket JSON override");
    noise_cmd->add_option("--state", noise.state, "analyzed ket JSON override");
    noise_cmd->add_option("--out", noise.out, "write the JSON report here");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the named identity batteries");
    verify_cmd
        ->add_option("suite", verify.suite, "all, operators, group, frames, or ww")
        ->check(CLI::IsMember({"all", "operators", "group", "frames", "ww"}));
    verify_cmd->add_option("--d", verify.d, "restrict to one dimension (default: 3, 5, 7)");
    verify_cmd->add_option("--seed", verify.seed, "seed for the randomized cases");
    verify_cmd->add_flag("--break-unified-fourier", verify.break_unified_fourier,
                         "fault injection: flip the transform kernel sign (must fail)");
    verify_cmd->add_option("--out", verify.out, "write the JSON report here");

    Table1Args table1;
    CLI::App* table1_cmd =
        app.add_subcommand("table1", "reference coefficient table for the built-in d=3 states");
    table1_cmd->add_option("--d", table1.d, "must be 3");
    table1_cmd->add_option("--out", table1.out, "write the CSV here");
    table1_cmd->add_option("--round", table1.round, "console presentation digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ops_cmd->parsed()) return run_ops(ops);
        if (group_cmd->parsed()) return run_group(group);
        if (dihedral_cmd->parsed()) return run_dihedral(dihedral);
        if (frame_cmd->parsed()) return run_frame(frame);
        if (ww_cmd->parsed()) return run_ww(ww);
        if (noise_cmd->parsed()) return run_noise(noise);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (table1_cmd->parsed()) return run_table1(table1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
