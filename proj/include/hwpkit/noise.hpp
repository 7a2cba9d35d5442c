#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwpkit/frames.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/ring.hpp"

namespace hwp {

enum class NoiseKind { RealUniform, ComplexUniform };

const char* to_string(FrameKind kind);
const char* to_string(NoiseKind kind);

struct NoiseConfig {
    double amplitude = 0.1;                    // noise bound E, entries drawn from [-E, E]
    int trials = 1;
    std::uint64_t seed = 0;
    NoiseKind kind = NoiseKind::RealUniform;   // complex mode draws re and im independently
};

// amplitude must be >= 0 (zero is the noiseless limit), trials >= 1.
void validate(const NoiseConfig& cfg);

// Deterministic uniform stream: every value is a pure function of
// (seed, trial, stream tag, draw index), so parallel and serial runs agree.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t tag);
    double next_unit();                        // uniform in [0, 1)
    double next_symmetric(double amplitude);   // uniform in [-amplitude, amplitude)

private:
    std::uint64_t state_;
};

struct NoisyTrial {
    Ket state;            // (1/d or 1/2d) sum (F + eps) |C>
    double error;         // |<f_noisy|f> - 1| by explicit reconstruction
    double error_closed;  // |sum conj(eps) F| / (d or 2d)
};

// Perturbs every Bargmann coefficient of f (renormalized first) against the
// frame by an independent uniform draw and reconstructs.  The closed-form
// error conjugates eps, as the inner product demands; for real noise the two
// error fields agree to machine precision.
NoisyTrial noisy_reconstruct(const CoherentFrame& frame, const Ket& f, const NoiseConfig& cfg,
                             int trial);

struct NoiseReport {
    FrameKind frame = FrameKind::HW;
    NoiseKind noise = NoiseKind::RealUniform;
    std::vector<double> errors;        // per-trial closed-form errors, trial order
    double mean = 0.0;
    double stddev = 0.0;               // population standard deviation
    double max_closed_form_gap = 0.0;  // worst |direct - closed| over all trials
    std::string descriptor;
};

struct ExperimentResult {
    NoiseReport hw;
    NoiseReport hwp;
    bool e2_lt_e1 = false;  // mean error of the doubled frame below the plain frame
};

// Builds both frames from the fiducial s, analyzes f through each, and runs
// cfg.trials independent perturbations per frame.  The two frames use
// distinct stream tags, so their draws are independent; trial t of either
// frame sees the same noise no matter how trials are scheduled.
// Honors HWPKIT_THREADS as an upper bound on worker threads.
ExperimentResult run_experiment(const Ket& s, const Ket& f, const NoiseConfig& cfg);

// Numerically stable order-independent reduction used for the report means.
double pairwise_sum(const std::vector<double>& values);

// Worker-thread cap: HWPKIT_THREADS if set and >= 1, else hardware concurrency.
int thread_budget();

}  // namespace hwp
