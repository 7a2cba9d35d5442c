#include "hwpkit/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace hwp {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t frame_tag(FrameKind kind) { return kind == FrameKind::HW ? 0 : 1; }

double pairwise_sum_range(const double* x, std::size_t n) {
    if (n <= 8) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += x[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_range(x, half) + pairwise_sum_range(x + half, n - half);
}

}  // namespace

const char* to_string(FrameKind kind) { return kind == FrameKind::HW ? "HW" : "HWP"; }

const char* to_string(NoiseKind kind) {
    return kind == NoiseKind::RealUniform ? "real-uniform" : "complex-uniform";
}

void validate(const NoiseConfig& cfg) {
    if (!(cfg.amplitude >= 0.0))
        throw std::invalid_argument("noise amplitude must be nonnegative, got " +
                                    std::to_string(cfg.amplitude));
    if (cfg.trials < 1)
        throw std::invalid_argument("trial count must be at least 1, got " +
                                    std::to_string(cfg.trials));
}

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t tag)
    : state_(mix64(seed + 0x9e3779b97f4a7c15ULL * (trial + 1)) ^
             mix64(tag + 0x2545f4914f6cdd1dULL)) {}

double UniformStream::next_unit() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
}

double UniformStream::next_symmetric(double amplitude) {
    return amplitude * (2.0 * next_unit() - 1.0);
}

double pairwise_sum(const std::vector<double>& values) {
    return pairwise_sum_range(values.data(), values.size());
}

int thread_budget() {
    if (const char* env = std::getenv("HWPKIT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

namespace {

std::vector<std::complex<double>> draw_noise(const NoiseConfig& cfg, int trial, FrameKind kind,
                                             std::size_t count) {
    UniformStream stream(cfg.seed, static_cast<std::uint64_t>(trial), frame_tag(kind));
    std::vector<std::complex<double>> eps(count);
    for (auto& e : eps) {
        const double re = stream.next_symmetric(cfg.amplitude);
        e = cfg.kind == NoiseKind::RealUniform
                ? std::complex<double>(re, 0.0)
                : std::complex<double>(re, stream.next_symmetric(cfg.amplitude));
    }
    return eps;
}

Ket unit_state(const Ket& f) {
    const double norm = f.norm();
    if (norm < 1e-12) throw std::invalid_argument("cannot analyze the zero vector");
    return f / norm;
}

}  // namespace

NoisyTrial noisy_reconstruct(const CoherentFrame& frame, const Ket& f, const NoiseConfig& cfg,
                             int trial) {
    validate(cfg);
    if (trial < 0)
        throw std::invalid_argument("trial index must be nonnegative, got " +
                                    std::to_string(trial));
    if (f.size() != frame.dim().value())
        throw std::invalid_argument("state length " + std::to_string(f.size()) +
                                    " does not match frame dimension " +
                                    std::to_string(frame.dim().value()));
    const Ket unit = unit_state(f);
    const auto indices = frame.indices();
    const double weight =
        frame.kind() == FrameKind::HW ? frame.dim().value() : 2.0 * frame.dim().value();
    const BargmannTable table = bargmann(frame, unit);
    const auto eps = draw_noise(cfg, trial, frame.kind(), indices.size());

    Ket noisy = Ket::Zero(frame.dim().value());
    std::complex<double> closed = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const std::complex<double> coeff = table.at(indices[i].alpha, indices[i].beta,
                                                    indices[i].nu);
        noisy += (coeff + eps[i]) * frame.state(indices[i]);
        closed += std::conj(eps[i]) * coeff;
    }
    noisy /= weight;

    NoisyTrial out;
    out.state = noisy;
    out.error = std::abs(noisy.dot(unit) - std::complex<double>(1.0, 0.0));
    out.error_closed = std::abs(closed) / weight;
    return out;
}

namespace {

// Per-frame batch with the frame states and coefficients hoisted out of the
// trial loop; writes results by trial index so scheduling cannot reorder them.
NoiseReport run_frame(const CoherentFrame& frame, const Ket& unit, const NoiseConfig& cfg) {
    const auto indices = frame.indices();
    const std::size_t n = indices.size();
    const int d = frame.dim().value();
    const double weight = frame.kind() == FrameKind::HW ? d : 2.0 * d;

    Eigen::MatrixXcd states(d, static_cast<Eigen::Index>(n));
    Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Ket& c = frame.state(indices[i]);
        states.col(static_cast<Eigen::Index>(i)) = c;
        coeffs[static_cast<Eigen::Index>(i)] = c.dot(unit);
    }

    std::vector<double> errors(static_cast<std::size_t>(cfg.trials));
    std::vector<double> gaps(static_cast<std::size_t>(cfg.trials));
    const auto worker = [&](int lo, int hi) {
        Eigen::VectorXcd perturbed(static_cast<Eigen::Index>(n));
        for (int t = lo; t < hi; ++t) {
            const auto eps = draw_noise(cfg, t, frame.kind(), n);
            std::complex<double> closed = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                perturbed[static_cast<Eigen::Index>(i)] =
                    coeffs[static_cast<Eigen::Index>(i)] + eps[i];
                closed += std::conj(eps[i]) * coeffs[static_cast<Eigen::Index>(i)];
            }
            const Ket noisy = (states * perturbed) / weight;
            const double closed_err = std::abs(closed) / weight;
            const double direct_err = std::abs(noisy.dot(unit) - std::complex<double>(1.0, 0.0));
            errors[static_cast<std::size_t>(t)] = closed_err;
            gaps[static_cast<std::size_t>(t)] = std::abs(direct_err - closed_err);
        }
    };

    const int workers = std::max(1, std::min(thread_budget(), cfg.trials));
    if (workers == 1) {
        worker(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (cfg.trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(cfg.trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    NoiseReport report;
    report.frame = frame.kind();
    report.noise = cfg.kind;
    report.errors = std::move(errors);
    report.mean = pairwise_sum(report.errors) / static_cast<double>(cfg.trials);
    std::vector<double> sq(report.errors.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double dev = report.errors[i] - report.mean;
        sq[i] = dev * dev;
    }
    report.stddev = std::sqrt(pairwise_sum(sq) / static_cast<double>(cfg.trials));
    report.max_closed_form_gap = *std::max_element(gaps.begin(), gaps.end());
    char buf[160];
    std::snprintf(buf, sizeof(buf), "d=%d frame=%s trials=%d amplitude=%g seed=%llu noise=%s", d,
                  to_string(frame.kind()), cfg.trials, cfg.amplitude,
                  static_cast<unsigned long long>(cfg.seed), to_string(cfg.kind));
    report.descriptor = buf;
    return report;
}

}  // namespace

ExperimentResult run_experiment(const Ket& s, const Ket& f, const NoiseConfig& cfg) {
    validate(cfg);
    if (s.size() != f.size())
        throw std::invalid_argument("fiducial length " + std::to_string(s.size()) +
                                    " does not match state length " + std::to_string(f.size()));
    const Fiducial fiducial = validate_fiducial(s);
    const Ket unit = unit_state(f);
    const CoherentFrame hw = build_frame(FrameKind::HW, fiducial);
    const CoherentFrame hwp = build_frame(FrameKind::HWP, fiducial);

    ExperimentResult result{run_frame(hw, unit, cfg), run_frame(hwp, unit, cfg), false};
    result.e2_lt_e1 = result.hwp.mean < result.hw.mean;
    return result;
}

}  // namespace hwp
