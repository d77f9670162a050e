#pragma once

// Zero-point-field quantities for an atom with the exponential effective
// electron density rho(r) = exp(-r/a) / (8 pi a^3).
//
// Everything here is computed in natural units hbar = c = a = 1. G(tau) is in
// units hbar c / a^4 and tau is the lag in units a / c. Use AtomModel to
// restore physical units.

#include "photofpt/params.hpp"

namespace photofpt::field {

struct AtomModel {
    double a = 1.0;     ///< atomic radius
    double hbar = 1.0;
    double c = 1.0;

    void validate() const;

    /// Normalized density (8 pi a^3)^{-1} exp(-r/a).
    double density(double r) const;

    /// Quadrature of 4 pi r^2 rho(r) over [0, inf); equals 1.
    double density_normalization() const;

    /// hbar c / a^4, the unit of G.
    double correlation_unit() const;
    /// hbar c^{3/2} a^{-7/2}, the unit of sigma.
    double sigma_unit() const;
};

struct CorrelationSample {
    double tau = 0.0;
    double g = 0.0;
};

/// I(x) = x / (4 pi (x^2+1)^2), the sine transform of r rho(r) at x = omega a / c
/// (units 1/a).
struct FormFactor {
    double x = 0.0;
    double value = 0.0;

    static FormFactor at(double x);
};

/// G(tau) = (2 / 3 pi) int_0^inf x^3 cos(tau x) / (x^2+1)^4 dx.
///
/// tau = 0 uses a plain adaptive quadrature on [0, inf). For tau > 0 the
/// integral is split into panels between consecutive zeros of cos(tau x);
/// the early panels are summed directly and the alternating tail is
/// accelerated with the Euler transform. `tail` carries the error estimate.
SeriesValue g_tau(double tau, const SeriesControl& ctrl = {});

CorrelationSample correlation(double tau, const SeriesControl& ctrl = {});

/// (1/(18 pi)) (1 - tau^2).
double g_tau_small(double tau);

/// (25/512) sqrt(3/10) exp(-2 sqrt(2) tau / 5) cos(sqrt(3/5) tau).
double g_tau_large(double tau);

/// int_0^inf x^p / (x^2+1)^q dx by adaptive quadrature.
double power_moment_quadrature(int p, int q);

/// Same integral from 1/2 B((p+1)/2, q-(p+1)/2).
double power_moment_closed_form(int p, int q);

struct MomentIntegral {
    double quadrature = 0.0;
    double closed_form = 0.0;  ///< 5 pi / 4096
    bool agree = false;        ///< |quadrature - closed_form| < 1e-10
};

/// int_0^inf x^6 / (x^2+1)^8 dx, by both routes.
MomentIntegral moment_integral();

/// sigma^2 computed from the time-domain definition and from its frequency-domain
/// reduction. Values in natural units unless stated.
struct SigmaReport {
    double sigma2_time = 0.0;       ///< (c^2/8 pi^2) int F(t)^2 dt, quadrature of G(tau)^2
    double sigma2_frequency = 0.0;  ///< Parseval reduction to int x^2 I(x)^4 dx
    double sigma2_closed_form = 0.0;  ///< 5 / (73728 pi^2)
    double sigma_time = 0.0;
    double sigma_frequency = 0.0;
    double relative_difference = 0.0;
    double time_tail = 0.0;         ///< tau^{-8} tail added beyond the quadrature range
    bool agree = false;             ///< relative_difference < 1e-6

    double sigma_physical = 0.0;    ///< sigma_frequency * atom.sigma_unit()

    /// Values printed in the source material, reported for comparison only.
    static constexpr double kQuotedAppendix = 2.12e-4;
    static constexpr double kQuotedOrder = 1e-3;
};

SigmaReport sigma_const(const AtomModel& atom = {}, const SeriesControl& ctrl = {});

}  // namespace photofpt::field
