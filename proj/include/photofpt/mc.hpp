#pragma once

// Euler-Maruyama simulation of the threshold accumulator.
//
// Each path starts at the origin and takes steps
//   dE_i = drift_i dt + sigma sqrt(dt) N(0, 1),   drift = (0, 0, i_s),
// checking the absorbing boundary after every full step. Path p draws its
// noise from stream p of the configured seed, so every result is a pure
// function of the configuration regardless of how many workers run it.

#include <cstdint>
#include <string>
#include <vector>

#include "photofpt/params.hpp"

namespace photofpt::mc {

inline constexpr std::uint64_t kDefaultSeed = 20071010ULL;

enum class Boundary { interval, cube, sphere };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct MCConfig {
    int dimension = 1;
    Boundary boundary = Boundary::interval;
    DetectorParams params{};
    double dt = 1e-3;
    std::int64_t n_paths = 100000;
    std::uint64_t seed = kDefaultSeed;
    double max_time = 100.0;

    /// Throws InvalidParameter unless: dimension in {1, 3}; interval iff
    /// dimension 1; 0 < dt <= 0.01 e_m^2/sigma^2; n_paths >= 100;
    /// max_time >= 100 e_m^2/sigma^2.
    void validate() const;

    /// Config with max_time set to its minimum admissible value.
    static MCConfig make(const DetectorParams& params, int dimension, Boundary boundary,
                         double dt = 1e-3, std::int64_t n_paths = 100000,
                         std::uint64_t seed = kDefaultSeed);
};

/// Parallel schedule. Never affects results.
struct RunOptions {
    unsigned workers = 0;  ///< 0 picks std::thread::hardware_concurrency()
};

struct FPTEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::int64_t n_absorbed = 0;
    std::int64_t n_censored = 0;
    double dt_used = 0.0;

    std::int64_t n_paths() const { return n_absorbed + n_censored; }
    double censored_fraction() const;
    /// False when more than 0.1% of the paths hit max_time.
    bool reliable() const { return censored_fraction() <= 1e-3; }
};

/// Raw estimates at dt and dt/2 on the same Brownian paths, and their
/// extrapolation assuming a bias c sqrt(dt):
///   t0 = (sqrt(2) t(dt/2) - t(dt)) / (sqrt(2) - 1),
/// formed path by path so `extrapolated.std_err` includes the pairing.
struct RichardsonEstimate {
    FPTEstimate coarse;
    FPTEstimate fine;
    FPTEstimate extrapolated;
};

struct BoundaryComparison {
    RichardsonEstimate sphere;
    RichardsonEstimate cube;
    double ratio = 0.0;          ///< extrapolated sphere mean / cube mean
    double ratio_std_err = 0.0;  ///< delta method on the paired per-path values
    std::int64_t containment_violations = 0;  ///< paths with sphere time > cube time
};

struct EventStream {
    std::vector<double> event_times;  ///< strictly increasing, all <= horizon
    double horizon = 0.0;
    std::int64_t n_censored = 0;      ///< intervals that hit max_time without an event
    double dt_used = 0.0;
};

struct RenewalRate {
    double rate = 0.0;
    double std_err = 0.0;  ///< renewal CLT: sqrt(Var T / (E[T]^3 horizon))
    std::int64_t n_events = 0;
};

/// First-passage times of every path at step dt; +inf marks a censored path.
std::vector<double> sample_fpt(const MCConfig& config, const RunOptions& run = {});

FPTEstimate simulate_fpt(const MCConfig& config, const RunOptions& run = {});

RichardsonEstimate simulate_fpt_richardson(const MCConfig& config, const RunOptions& run = {});

/// Sphere |E| = e_m and cube max|E_i| = e_m on common random numbers.
/// `base` must be three-dimensional; its boundary field is ignored and its
/// params are replaced by `params`.
BoundaryComparison simulate_fpt_sphere_vs_cube(const DetectorParams& params, const MCConfig& base,
                                               const RunOptions& run = {});

/// Renewal stream: successive first-passage intervals, each restarted at the
/// exact origin, accumulated until `horizon`. Interval j uses stream j.
EventStream simulate_event_stream(const MCConfig& config, double horizon, const RunOptions& run = {});

std::vector<double> interarrival_times(const EventStream& stream);

RenewalRate renewal_rate(const EventStream& stream);

/// (est.mean - analytic) / est.std_err. Requires est.n_absorbed >= 2.
double zscore(double analytic, const FPTEstimate& est);

}  // namespace photofpt::mc
