#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hwpkit/io.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"

using namespace hwp;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("HWPKIT_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "HWPKIT_CLI must point at the command-line binary");
    static int counter = 0;
    const std::string tag = std::to_string(counter++);
    const std::string out_path = "cli_stdout_" + tag + ".txt";
    const std::string err_path = "cli_stderr_" + tag + ".txt";
    const std::string cmd =
        "\"" + std::string(cli) + "\" " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("cli_fixture_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("verification runs clean and honors the fault hook") {
    const RunResult ok = run_cli("verify ww --d 3");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verify: all identities pass") != std::string::npos);

    const RunResult broken = run_cli("verify ww --d 3 --break-unified-fourier");
    CHECK(broken.code == 1);
    CHECK(broken.out.find("FAIL") != std::string::npos);
    CHECK(broken.out.find("unified-fourier") != std::string::npos);
}

TEST_CASE("usage problems exit with code 2 and a reason") {
    const RunResult even = run_cli("verify all --d 4");
    CHECK(even.code == 2);
    CHECK(even.err.find("--d must be odd and >= 3, got 4") != std::string::npos);

    CHECK(run_cli("bogus").code == 2);

    const RunResult neither = run_cli("ops --d 3");
    CHECK(neither.code == 2);
    CHECK(neither.err.find("ops needs exactly one of --dump or --load") != std::string::npos);

    const RunResult both = run_cli("ops --d 3 --dump Z --load x.json");
    CHECK(both.code == 2);
}

TEST_CASE("group report carries the subgroup chain") {
    const RunResult r = run_cli("group --d 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"derived_series_sizes\"") != std::string::npos);
    for (const char* size : {"250", "125", "5", "1"})
        CHECK(r.out.find(size) != std::string::npos);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("dumped generators reload as the library matrices") {
    TempFile z("z.json");
    const RunResult saved = run_cli("ops --d 3 --dump Z --out " + z.path);
    CHECK(saved.code == 0);
    const Operator loaded = load_matrix_file(z.path);
    CHECK((loaded - clock_z(ModInt(1, Dim(3)))).cwiseAbs().maxCoeff() == 0.0);

    // console form is the same JSON
    const RunResult console = run_cli("ops --d 3 --dump Z");
    CHECK(console.code == 0);
    const Operator parsed = load_matrix(console.out);
    CHECK((parsed - clock_z(ModInt(1, Dim(3)))).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("loading and re-saving a matrix preserves every byte") {
    TempFile in("op_in.json");
    TempFile out("op_out.json");
    Operator op(3, 3);
    op.setZero();
    op(0, 1) = {0.123456789012345, -1.0 / 3.0};
    op(2, 0) = {-0.5, 0.25};
    save_matrix_file(in.path, op);
    const RunResult r = run_cli("ops --d 3 --load " + in.path + " --out " + out.path);
    CHECK(r.code == 0);
    CHECK(slurp(out.path) == slurp(in.path));
}

TEST_CASE("reference table output is deterministic and rounds for display") {
    TempFile a("t1a.csv");
    TempFile b("t1b.csv");
    CHECK(run_cli("table1 --d 3 --out " + a.path).code == 0);
    CHECK(run_cli("table1 --d 3 --out " + b.path).code == 0);
    const std::string bytes = slurp(a.path);
    CHECK(bytes == slurp(b.path));
    CHECK(bytes.rfind("nu,alpha,beta,re_f,im_f,q,re_w,im_w\n", 0) == 0);

    const RunResult rounded = run_cli("table1 --d 3 --round 2");
    CHECK(rounded.code == 0);
    CHECK(rounded.out.find("0,0,0,0.49,0.23,0.29,0.99,0.00") != std::string::npos);

    const RunResult wrong = run_cli("table1 --d 5");
    CHECK(wrong.code == 2);
    CHECK(wrong.err.find("the reference table is tabulated for d = 3") != std::string::npos);
}

TEST_CASE("phase-space table export reads an operator file") {
    TempFile op_file("theta.json");
    TempFile csv("theta.csv");
    save_matrix_file(op_file.path, clock_z(ModInt(1, Dim(3))));
    const RunResult r =
        run_cli("ww --operator " + op_file.path + " --format csv --out " + csv.path);
    CHECK(r.code == 0);
    const std::string bytes = slurp(csv.path);
    CHECK(bytes.rfind("nu,alpha,beta,re,im\n", 0) == 0);

    TempFile trunc("trunc.json");
    {
        std::ofstream f(trunc.path);
        f << "{\"d\": 3, \"rows";
    }
    const RunResult bad = run_cli("ww --operator " + trunc.path);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("parse error") != std::string::npos);
    CHECK(bad.err.find(trunc.path) != std::string::npos);
}

TEST_CASE("noise command prints the summary statistics") {
    const RunResult r = run_cli("noise --d 3 --trials 40 --seed 7");
    CHECK(r.code == 0);
    for (const char* key :
         {"\"mean_e1\"", "\"mean_e2\"", "\"std_e1\"", "\"std_e2\"", "\"max_closed_form_gap\"",
          "\"e2_lt_e1\"", "\"trials\": 40", "\"seed\": 7"})
        CHECK(r.out.find(key) != std::string::npos);
}
