#pragma once

// Parameter and result types shared by the analytic, field and Monte Carlo
// modules. Units follow the accumulator picture: energies in units of the
// threshold, time in whatever unit makes sigma^2 an energy^2/time.

#include <stdexcept>
#include <string>

namespace photofpt {

/// Thrown when a parameter struct violates its invariants.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by the `require()` helpers when a truncated series or a quadrature
/// did not meet its tolerance.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimensionless signal intensity x = i_s * e_m / sigma^2.
class DimensionlessIntensity {
public:
    constexpr DimensionlessIntensity() = default;
    explicit DimensionlessIntensity(double x);

    constexpr double value() const noexcept { return x_; }

private:
    double x_ = 0.0;
};

/// Detector threshold, ZPF noise amplitude and signal intensity.
///
/// The accumulator performs a Brownian motion with diffusion coefficient
/// sigma^2/2 per axis and drift i_s along the beam axis. A count is produced
/// when it first leaves the box |E_i| < e_m (or the interval, in 1D).
struct DetectorParams {
    double e_m = 1.0;            ///< threshold energy
    double sigma = 1.0;          ///< white-noise amplitude per Poynting component
    double i_s = 0.0;            ///< signal intensity (drift of the beam-axis component)
    double cross_section = 1.0;  ///< effective cross section, multiplies rates

    void validate() const;

    DimensionlessIntensity x() const;

    /// Natural time unit e_m^2 / sigma^2.
    double time_unit() const { return e_m * e_m / (sigma * sigma); }

    /// Parameters with e_m = sigma = 1 and the given dimensionless intensity.
    static DetectorParams from_x(DimensionlessIntensity x, double e_m = 1.0, double sigma = 1.0,
                                 double cross_section = 1.0);
};

/// Truncation and tolerance settings for every series in the library.
struct SeriesControl {
    int n_images = 30;       ///< image terms kept on each side of n = 0
    int kl_max = 60;         ///< (k, l) truncation of the 3D double series
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;

    void validate() const;

    /// True when `tail` is within max(abs_tol, rel_tol * |value|).
    bool accepts(double value, double tail) const;
};

/// A truncated series or quadrature result together with its tail estimate.
struct SeriesValue {
    double value = 0.0;
    double tail = 0.0;   ///< bound (or estimate) of the neglected remainder
    int terms = 0;       ///< number of terms or panels evaluated
    bool converged = false;

    /// Returns `value`, throwing TruncationError if not converged.
    double require(const char* what) const;
};

/// Quantum-detector constants in R_q = eta * K * i_s.
struct QuantumDetectorParams {
    double eta = 1.0;      ///< quantum efficiency, 0 < eta <= 1
    double k_const = 1.0;  ///< dimensional constant K (1 / energy)

    void validate() const;

    /// Threshold energy that makes the model agree with R_q at high intensity.
    double equivalent_threshold() const { return 1.0 / (k_const * eta); }
};

}  // namespace photofpt
