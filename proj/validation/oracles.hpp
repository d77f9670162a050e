#pragma once

// Independent reference computations used by the test and validation
// suites. None of these call into the series code they are checked against,
// except where noted (the survival quadratures integrate the image survival
// functions to check the separately summed mean-time series).

#include "photofpt/params.hpp"

namespace photofpt::oracle {

/// Crank-Nicolson solution of rho_t = (sigma^2/2) rho_EE - drift rho_E on
/// (-e_m, e_m) with absorbing ends, started from the free drifted Gaussian at
/// a small time t0 and integrated on a uniform grid. Returns int rho dE at t.
struct PdeGrid {
    int interior_points = 3999;
    double time_step = 1e-4;  ///< in units of e_m^2 / sigma^2
    double start_time = 1e-3; ///< in units of e_m^2 / sigma^2
};
double pde_axis_survival(double t, double drift, const DetectorParams& p, const PdeGrid& grid = {});

/// Mean exit time of the slab as int_0^inf L(t) dt over the image survival.
double quadrature_mean_fpt_1d(const DetectorParams& p);

/// Mean exit time of the cube as int_0^inf K(t)^2 L(t) dt.
double quadrature_mean_fpt_3d(const DetectorParams& p);

/// Direct square partial sum of the (k, l) series for F(x) up to `k_max`,
/// with the last row and column weighted 1/2 (the mean of two consecutive
/// partial sums of an alternating series). Uses std::cosh directly.
double f3_bruteforce(double x, int k_max);

/// Mean exit time from the centre of a ball of radius e_m, from a finite-difference
/// solve of (sigma^2/2)(u'' + 2u'/r) = -1, u'(0) = 0, u(e_m) = 0.
double radial_sphere_mean_exit(const DetectorParams& p, int intervals = 2000);

/// Mean exit time of the slab from the ODE D u'' + drift u' = -1 solved by
/// finite differences on (-e_m, e_m).
double ode_mean_fpt_1d(const DetectorParams& p, int intervals = 20000);

/// G(tau) in units hbar c / a^4 via the double-exponential Fourier-cosine
/// rule (Ooura-Mori) from Boost.Math.
double g_tau_ooura(double tau);

}  // namespace photofpt::oracle
