#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hwpkit/frames.hpp"
#include "hwpkit/noise.hpp"
#include "hwpkit/ring.hpp"

using namespace hwp;

TEST_CASE("streams are pure functions of their coordinates") {
    UniformStream a(42, 7, 3);
    UniformStream b(42, 7, 3);
    for (int i = 0; i < 64; ++i) CHECK(a.next_unit() == b.next_unit());

    UniformStream c(42, 8, 3);
    UniformStream e(42, 7, 4);
    UniformStream base(42, 7, 3);
    bool trial_differs = false;
    bool tag_differs = false;
    for (int i = 0; i < 16; ++i) {
        const double v = base.next_unit();
        trial_differs |= (c.next_unit() != v);
        tag_differs |= (e.next_unit() != v);
    }
    CHECK(trial_differs);
    CHECK(tag_differs);
}

TEST_CASE("draws stay inside their advertised ranges") {
    UniformStream s(1, 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = s.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = s.next_symmetric(0.1);
        CHECK(v >= -0.1);
        CHECK(v < 0.1);
    }
    CHECK(s.next_symmetric(0.0) == 0.0);
}

TEST_CASE("config validation names the offending field") {
    NoiseConfig good;
    validate(good);
    NoiseConfig zero;
    zero.amplitude = 0.0;  // noiseless limit is allowed
    validate(zero);

    NoiseConfig neg;
    neg.amplitude = -0.5;
    CHECK_THROWS_WITH_AS(validate(neg), "noise amplitude must be nonnegative, got -0.500000",
                         std::invalid_argument);
    NoiseConfig none;
    none.trials = 0;
    CHECK_THROWS_WITH_AS(validate(none), "trial count must be at least 1, got 0",
                         std::invalid_argument);
}

TEST_CASE("frame and noise kinds print by name") {
    CHECK(std::string(to_string(FrameKind::HW)) == "HW");
    CHECK(std::string(to_string(FrameKind::HWP)) == "HWP");
    CHECK(std::string(to_string(NoiseKind::RealUniform)) == "real-uniform");
    CHECK(std::string(to_string(NoiseKind::ComplexUniform)) == "complex-uniform");
}

TEST_CASE("single-trial reconstruction reports a consistent error pair") {
    const Dim d(3);
    const Fiducial fid = validate_fiducial(reference_fiducial(d));
    const CoherentFrame frame = build_frame(FrameKind::HWP, fid);
    const Ket f = reference_state(d);

    NoiseConfig cfg;
    cfg.amplitude = 0.1;
    cfg.trials = 4;
    cfg.seed = 9;

    const NoisyTrial trial = noisy_reconstruct(frame, f, cfg, 2);
    CHECK(trial.state.size() == 3);
    CHECK(trial.error > 0.0);
    // real noise: the direct overlap defect equals the closed form exactly
    CHECK(std::abs(trial.error - trial.error_closed) < 1e-13);

    // the same trial index reproduces bit-identically
    const NoisyTrial again = noisy_reconstruct(frame, f, cfg, 2);
    CHECK(trial.error == again.error);
    CHECK((trial.state - again.state).cwiseAbs().maxCoeff() == 0.0);
    // a different trial sees different noise
    CHECK(noisy_reconstruct(frame, f, cfg, 3).error != trial.error);

    NoiseConfig silent = cfg;
    silent.amplitude = 0.0;
    const NoisyTrial clean = noisy_reconstruct(frame, f, silent, 0);
    // the closed form is exactly zero; the direct error keeps synthesis roundoff
    CHECK(clean.error < 1e-12);
    CHECK(clean.error_closed == 0.0);
}

TEST_CASE("reconstruction rejects malformed requests") {
    const Dim d(3);
    const CoherentFrame frame = build_frame(FrameKind::HW, validate_fiducial(reference_fiducial(d)));
    const Ket f = reference_state(d);
    NoiseConfig cfg;

    CHECK_THROWS_WITH_AS(noisy_reconstruct(frame, f, cfg, -1),
                         "trial index must be nonnegative, got -1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(noisy_reconstruct(frame, reference_state(Dim(5)), cfg, 0),
                         "state length 5 does not match frame dimension 3",
                         std::invalid_argument);
    const Ket zero = Ket::Zero(3);
    CHECK_THROWS_WITH_AS(noisy_reconstruct(frame, zero, cfg, 0), "cannot analyze the zero vector",
                         std::invalid_argument);
}

TEST_CASE("the two-frame experiment separates the error scales") {
    const Dim d(3);
    const Ket s = reference_fiducial(d);
    const Ket f = reference_state(d);

    NoiseConfig cfg;
    cfg.amplitude = 0.1;
    cfg.trials = 400;
    cfg.seed = 7;

    const ExperimentResult res = run_experiment(s, f, cfg);
    CHECK(res.hw.errors.size() == 400);
    CHECK(res.hwp.errors.size() == 400);
    CHECK(res.hw.frame == FrameKind::HW);
    CHECK(res.hwp.frame == FrameKind::HWP);
    CHECK(res.hw.mean > 0.0);
    CHECK(res.hwp.mean > 0.0);
    CHECK(res.hwp.mean < res.hw.mean);
    CHECK(res.e2_lt_e1);
    CHECK(res.hw.max_closed_form_gap < 1e-12);
    CHECK(res.hwp.max_closed_form_gap < 1e-12);
    CHECK(res.hw.descriptor.find("HW") != std::string::npos);

    // mean and stddev agree with a direct pass over the per-trial errors
    double acc = 0.0;
    for (double v : res.hw.errors) acc += v;
    CHECK(res.hw.mean == doctest::Approx(acc / 400.0).epsilon(1e-12));
    double var = 0.0;
    for (double v : res.hw.errors) var += (v - res.hw.mean) * (v - res.hw.mean);
    CHECK(res.hw.stddev == doctest::Approx(std::sqrt(var / 400.0)).epsilon(1e-10));

    CHECK_THROWS_AS(run_experiment(s, reference_state(Dim(5)), cfg), std::invalid_argument);
}

TEST_CASE("experiments are reproducible and thread-count independent") {
    const Ket s = reference_fiducial(Dim(3));
    const Ket f = reference_state(Dim(3));
    NoiseConfig cfg;
    cfg.amplitude = 0.1;
    cfg.trials = 64;
    cfg.seed = 123;
    cfg.kind = NoiseKind::ComplexUniform;

    setenv("HWPKIT_THREADS", "1", 1);
    CHECK(thread_budget() == 1);
    const ExperimentResult serial = run_experiment(s, f, cfg);
    setenv("HWPKIT_THREADS", "8", 1);
    CHECK(thread_budget() == 8);
    const ExperimentResult threaded = run_experiment(s, f, cfg);
    unsetenv("HWPKIT_THREADS");
    CHECK(thread_budget() >= 1);

    REQUIRE(serial.hw.errors.size() == threaded.hw.errors.size());
    for (std::size_t i = 0; i < serial.hw.errors.size(); ++i) {
        CHECK(serial.hw.errors[i] == threaded.hw.errors[i]);
        CHECK(serial.hwp.errors[i] == threaded.hwp.errors[i]);
    }
    CHECK(serial.hw.mean == threaded.hw.mean);
    CHECK(serial.hwp.stddev == threaded.hwp.stddev);
}

TEST_CASE("zero amplitude yields exactly zero error on every trial") {
    NoiseConfig cfg;
    cfg.amplitude = 0.0;
    cfg.trials = 16;
    const ExperimentResult res =
        run_experiment(reference_fiducial(Dim(3)), reference_state(Dim(3)), cfg);
    for (double v : res.hw.errors) CHECK(v == 0.0);
    for (double v : res.hwp.errors) CHECK(v == 0.0);
    CHECK(res.hw.mean == 0.0);
    CHECK(res.hwp.stddev == 0.0);
}

TEST_CASE("pairwise summation is exact on patterned input") {
    std::vector<double> values;
    for (int i = 0; i < 1000; ++i) values.push_back(i % 2 == 0 ? 1.0 : -1.0);
    CHECK(pairwise_sum(values) == 0.0);
    values.assign(7, 0.125);
    CHECK(pairwise_sum(values) == 0.875);
    CHECK(pairwise_sum({}) == 0.0);
}
