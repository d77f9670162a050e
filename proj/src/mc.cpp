#include "photofpt/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <thread>

#include <boost/random/normal_distribution.hpp>

#include "photofpt/rng.hpp"

namespace photofpt::mc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Which exit times a path records. The coarse grid is every second fine step.
struct Kernel {
    double a = 1.0;
    double h = 1e-3;           // fine step
    double drift_step = 0.0;   // i_s * h on the last axis
    double noise = 1.0;        // sigma * sqrt(h)
    std::int64_t max_steps = 0;
    bool paired = false;
    bool track_box = true;     // interval in 1D, cube in 3D
    bool track_sphere = false;
};

struct PathTimes {
    double box_fine = kInf;
    double box_coarse = kInf;
    double sphere_fine = kInf;
    double sphere_coarse = kInf;
};

template <int Dim>
PathTimes run_path(const Kernel& k, std::uint64_t seed, std::uint64_t stream) {
    Xoshiro256pp rng(seed, stream);
    boost::random::normal_distribution<double> normal;
    double e[Dim] = {};
    PathTimes out;

    int remaining = (k.track_box ? 1 : 0) + (k.track_sphere ? 1 : 0);
    if (k.paired) remaining *= 2;
    const double a2 = k.a * k.a;

    for (std::int64_t step = 1; step <= k.max_steps && remaining > 0; ++step) {
        for (int i = 0; i < Dim; ++i) e[i] += k.noise * normal(rng);
        e[Dim - 1] += k.drift_step;

        const double t = static_cast<double>(step) * k.h;
        const bool coarse_point = k.paired && (step % 2 == 0);

        if (k.track_box) {
            bool out_box = false;
            for (int i = 0; i < Dim; ++i) out_box = out_box || std::abs(e[i]) >= k.a;
            if (out_box) {
                if (out.box_fine == kInf) {
                    out.box_fine = t;
                    --remaining;
                }
                if (coarse_point && out.box_coarse == kInf) {
                    out.box_coarse = t;
                    --remaining;
                }
            }
        }
        if (k.track_sphere) {
            double r2 = 0.0;
            for (int i = 0; i < Dim; ++i) r2 += e[i] * e[i];
            if (r2 >= a2) {
                if (out.sphere_fine == kInf) {
                    out.sphere_fine = t;
                    --remaining;
                }
                if (coarse_point && out.sphere_coarse == kInf) {
                    out.sphere_coarse = t;
                    --remaining;
                }
            }
        }
    }
    return out;
}

PathTimes run_path(int dimension, const Kernel& k, std::uint64_t seed, std::uint64_t stream) {
    return dimension == 1 ? run_path<1>(k, seed, stream) : run_path<3>(k, seed, stream);
}

unsigned resolve_workers(const RunOptions& run) {
    const unsigned w = run.workers != 0 ? run.workers : std::thread::hardware_concurrency();
    return std::max(1u, w);
}

// Calls fn(i) for every i in [begin, end). Work is handed out in blocks; the
// caller only ever writes slot i, so the schedule cannot change results.
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, const RunOptions& run, Fn&& fn) {
    constexpr std::int64_t kBlock = 256;
    const unsigned workers = resolve_workers(run);
    std::atomic<std::int64_t> next{begin};
    auto worker = [&] {
        for (;;) {
            const std::int64_t lo = next.fetch_add(kBlock);
            if (lo >= end) return;
            const std::int64_t hi = std::min(end, lo + kBlock);
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        }
    };
    if (workers == 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
}

Kernel make_kernel(const MCConfig& c, bool paired) {
    Kernel k;
    k.a = c.params.e_m;
    k.h = paired ? 0.5 * c.dt : c.dt;
    k.drift_step = c.params.i_s * k.h;
    k.noise = c.params.sigma * std::sqrt(k.h);
    k.max_steps = static_cast<std::int64_t>(std::ceil(c.max_time / k.h));
    k.paired = paired;
    k.track_box = c.boundary != Boundary::sphere;
    k.track_sphere = c.boundary == Boundary::sphere;
    return k;
}

std::vector<PathTimes> run_ensemble(const MCConfig& c, const Kernel& k, const RunOptions& run) {
    std::vector<PathTimes> times(static_cast<std::size_t>(c.n_paths));
    parallel_for(0, c.n_paths, run, [&](std::int64_t i) {
        times[static_cast<std::size_t>(i)] =
            run_path(c.dimension, k, c.seed, static_cast<std::uint64_t>(i));
    });
    return times;
}

FPTEstimate summarize(std::span<const double> samples, double dt) {
    FPTEstimate est;
    est.dt_used = dt;
    double sum = 0.0;
    for (double s : samples) {
        if (std::isfinite(s)) {
            sum += s;
            ++est.n_absorbed;
        } else {
            ++est.n_censored;
        }
    }
    if (est.n_absorbed == 0) {
        est.mean = std::numeric_limits<double>::quiet_NaN();
        est.std_err = std::numeric_limits<double>::quiet_NaN();
        return est;
    }
    est.mean = sum / static_cast<double>(est.n_absorbed);
    if (est.n_absorbed >= 2) {
        double ss = 0.0;
        for (double s : samples) {
            if (std::isfinite(s)) ss += (s - est.mean) * (s - est.mean);
        }
        const double n = static_cast<double>(est.n_absorbed);
        est.std_err = std::sqrt(ss / (n - 1.0) / n);
    }
    return est;
}

RichardsonEstimate summarize_pair(std::span<const double> fine, std::span<const double> coarse,
                                  double dt) {
    constexpr double r2 = std::numbers::sqrt2;
    std::vector<double> extrapolated(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) {
        extrapolated[i] = std::isfinite(coarse[i]) ? (r2 * fine[i] - coarse[i]) / (r2 - 1.0) : kInf;
    }
    RichardsonEstimate out;
    out.coarse = summarize(coarse, dt);
    out.fine = summarize(fine, 0.5 * dt);
    out.extrapolated = summarize(extrapolated, dt);
    return out;
}

}  // namespace

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::interval: return "interval";
        case Boundary::cube: return "cube";
        case Boundary::sphere: return "sphere";
    }
    return "unknown";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "interval") return Boundary::interval;
    if (s == "cube") return Boundary::cube;
    if (s == "sphere") return Boundary::sphere;
    throw InvalidParameter("unknown boundary '" + s + "'");
}

void MCConfig::validate() const {
    params.validate();
    const double unit = params.time_unit();
    if (dimension != 1 && dimension != 3) throw InvalidParameter("dimension must be 1 or 3");
    if ((boundary == Boundary::interval) != (dimension == 1)) {
        throw InvalidParameter("the interval boundary is used exactly when dimension is 1");
    }
    if (!(std::isfinite(dt) && dt > 0.0)) throw InvalidParameter("dt must be finite and > 0");
    if (dt > 0.01 * unit * (1.0 + 1e-12)) {
        throw InvalidParameter("dt must not exceed 0.01 e_m^2/sigma^2");
    }
    if (n_paths < 100) throw InvalidParameter("n_paths must be >= 100");
    if (!(max_time >= 100.0 * unit * (1.0 - 1e-12))) {
        throw InvalidParameter("max_time must be at least 100 e_m^2/sigma^2");
    }
}

MCConfig MCConfig::make(const DetectorParams& params, int dimension, Boundary boundary, double dt,
                        std::int64_t n_paths, std::uint64_t seed) {
    params.validate();
    MCConfig c;
    c.dimension = dimension;
    c.boundary = boundary;
    c.params = params;
    c.dt = dt;
    c.n_paths = n_paths;
    c.seed = seed;
    c.max_time = 100.0 * params.time_unit();
    c.validate();
    return c;
}

double FPTEstimate::censored_fraction() const {
    const auto n = n_paths();
    return n == 0 ? 0.0 : static_cast<double>(n_censored) / static_cast<double>(n);
}

std::vector<double> sample_fpt(const MCConfig& config, const RunOptions& run) {
    config.validate();
    const Kernel k = make_kernel(config, false);
    const auto paths = run_ensemble(config, k, run);
    std::vector<double> out(paths.size());
    const bool sphere = config.boundary == Boundary::sphere;
    std::transform(paths.begin(), paths.end(), out.begin(),
                   [sphere](const PathTimes& p) { return sphere ? p.sphere_fine : p.box_fine; });
    return out;
}

FPTEstimate simulate_fpt(const MCConfig& config, const RunOptions& run) {
    const auto times = sample_fpt(config, run);
    return summarize(times, config.dt);
}

RichardsonEstimate simulate_fpt_richardson(const MCConfig& config, const RunOptions& run) {
    config.validate();
    const Kernel k = make_kernel(config, true);
    const auto paths = run_ensemble(config, k, run);
    const bool sphere = config.boundary == Boundary::sphere;
    std::vector<double> fine(paths.size()), coarse(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        fine[i] = sphere ? paths[i].sphere_fine : paths[i].box_fine;
        coarse[i] = sphere ? paths[i].sphere_coarse : paths[i].box_coarse;
    }
    return summarize_pair(fine, coarse, config.dt);
}

BoundaryComparison simulate_fpt_sphere_vs_cube(const DetectorParams& params, const MCConfig& base,
                                               const RunOptions& run) {
    MCConfig c = base;
    c.params = params;
    c.boundary = Boundary::cube;
    if (c.dimension != 3) throw InvalidParameter("sphere/cube comparison needs dimension 3");
    c.validate();

    Kernel k = make_kernel(c, true);
    k.track_box = true;
    k.track_sphere = true;
    const auto paths = run_ensemble(c, k, run);

    const std::size_t n = paths.size();
    std::vector<double> sf(n), sc(n), cf(n), cc(n);
    BoundaryComparison out;
    for (std::size_t i = 0; i < n; ++i) {
        sf[i] = paths[i].sphere_fine;
        sc[i] = paths[i].sphere_coarse;
        cf[i] = paths[i].box_fine;
        cc[i] = paths[i].box_coarse;
        if (sf[i] > cf[i] || sc[i] > cc[i]) ++out.containment_violations;
    }
    out.sphere = summarize_pair(sf, sc, c.dt);
    out.cube = summarize_pair(cf, cc, c.dt);

    // Ratio of extrapolated means with a paired delta-method error.
    constexpr double r2 = std::numbers::sqrt2;
    const double ms = out.sphere.extrapolated.mean;
    const double mc_ = out.cube.extrapolated.mean;
    out.ratio = ms / mc_;
    double ss = 0.0;
    std::int64_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(cc[i]) || !std::isfinite(sc[i])) continue;
        const double ys = (r2 * sf[i] - sc[i]) / (r2 - 1.0);
        const double yc = (r2 * cf[i] - cc[i]) / (r2 - 1.0);
        const double d = ys - out.ratio * yc;
        ss += d * d;
        ++used;
    }
    if (used >= 2) {
        const double m = static_cast<double>(used);
        out.ratio_std_err = std::sqrt(ss / (m - 1.0) / m) / mc_;
    }
    return out;
}

EventStream simulate_event_stream(const MCConfig& config, double horizon, const RunOptions& run) {
    config.validate();
    if (!(std::isfinite(horizon) && horizon > 0.0)) {
        throw InvalidParameter("horizon must be finite and > 0");
    }
    const Kernel k = make_kernel(config, false);
    const bool sphere = config.boundary == Boundary::sphere;

    EventStream stream;
    stream.horizon = horizon;
    stream.dt_used = config.dt;

    constexpr std::int64_t kBatch = 4096;
    std::vector<double> batch(kBatch);
    double clock = 0.0;
    for (std::int64_t first = 0;; first += kBatch) {
        parallel_for(0, kBatch, run, [&](std::int64_t i) {
            const PathTimes p =
                run_path(config.dimension, k, config.seed, static_cast<std::uint64_t>(first + i));
            batch[static_cast<std::size_t>(i)] = sphere ? p.sphere_fine : p.box_fine;
        });
        for (double interval : batch) {
            if (!std::isfinite(interval)) {
                // No detection before max_time: the accumulator keeps running
                // past the cap, which we treat as a restart without an event.
                ++stream.n_censored;
                clock += config.max_time;
                if (clock > horizon) return stream;
                continue;
            }
            clock += interval;
            if (clock > horizon) return stream;
            stream.event_times.push_back(clock);
        }
    }
}

std::vector<double> interarrival_times(const EventStream& stream) {
    std::vector<double> out;
    out.reserve(stream.event_times.size());
    double prev = 0.0;
    for (double t : stream.event_times) {
        out.push_back(t - prev);
        prev = t;
    }
    return out;
}

RenewalRate renewal_rate(const EventStream& stream) {
    RenewalRate out;
    out.n_events = static_cast<std::int64_t>(stream.event_times.size());
    out.rate = static_cast<double>(out.n_events) / stream.horizon;
    const auto gaps = interarrival_times(stream);
    if (gaps.size() >= 2) {
        const FPTEstimate g = summarize(gaps, stream.dt_used);
        const double n = static_cast<double>(gaps.size());
        const double var = g.std_err * g.std_err * n;
        out.std_err = std::sqrt(var / (g.mean * g.mean * g.mean * stream.horizon));
    }
    return out;
}

double zscore(double analytic, const FPTEstimate& est) {
    if (est.n_absorbed < 2 || !(est.std_err > 0.0)) {
        throw InvalidParameter("z-score needs at least two absorbed paths and a positive std_err");
    }
    return (est.mean - analytic) / est.std_err;
}

}  // namespace photofpt::mc
