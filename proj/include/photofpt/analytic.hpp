#pragma once

// Survival probabilities, mean first-passage times and counting rates of the
// threshold accumulator, for the slab (1D) and cube (3D) absorbing boundaries.
//
// Conventions: every axis diffuses with coefficient sigma^2/2, the beam axis
// drifts with velocity i_s, the walk starts at the origin and is absorbed on
// |E_i| = e_m. All functions are pure and thread-safe.

#include "photofpt/params.hpp"

namespace photofpt {

/// Per-axis survival factors at time t; the cube survival is k_axis^2 * l_axis.
struct SurvivalFactors {
    double t = 0.0;
    double l_axis = 1.0;  ///< beam axis (drift i_s)
    double k_axis = 1.0;  ///< each driftless transverse axis
    double tail = 0.0;
    bool converged = true;

    double survival() const { return k_axis * k_axis * l_axis; }
};

enum class Regime { high, low };
enum class Geometry { d1, d3 };

// --- one dimension -------------------------------------------------------

/// Mean exit time of the slab, (e_m/i_s) tanh(x). Returns e_m^2/sigma^2 at i_s = 0.
double mean_fpt_1d(const DetectorParams& p);

/// cross_section / mean_fpt_1d = cross_section (i_s/e_m) coth(x).
double rate_1d(const DetectorParams& p);

/// High-intensity (i_s/e_m)(1 + 2 e^{-2x}) or low-intensity sigma^2/e_m^2 limit,
/// scaled by the cross section like rate_1d.
double rate_1d_asymptotic(const DetectorParams& p, Regime regime);

// --- per-axis survival -----------------------------------------------------

/// Probability that a single axis with the given drift has not reached
/// +-e_m by time t, from the alternating image sum. Each image term is
/// integrated over the slab in closed form with the normal CDF.
SeriesValue axis_survival_image(double t, double drift, const DetectorParams& p,
                                const SeriesControl& ctrl = {});

/// Driftless axis survival from its cosine (eigenfunction) expansion.
/// Throws InvalidParameter if `drift` is nonzero.
SeriesValue axis_survival_spectral(double t, const DetectorParams& p,
                                   const SeriesControl& ctrl = {}, double drift = 0.0);

/// Cube survival factors: K from the driftless image sum, L with drift i_s.
SurvivalFactors survival_3d(double t, const DetectorParams& p, const SeriesControl& ctrl = {});

// --- three dimensions --------------------------------------------------------

/// The double series F(x) whose scaled value (128/pi^4) F(x) is the cube mean
/// exit time in units e_m^2/sigma^2.
SeriesValue f3_series(DimensionlessIntensity x, const SeriesControl& ctrl = {});

/// (128/pi^4) (e_m^2/sigma^2) F(x).
SeriesValue mean_fpt_3d(const DetectorParams& p, const SeriesControl& ctrl = {});

/// cross_section / mean_fpt_3d.
SeriesValue rate_3d(const DetectorParams& p, const SeriesControl& ctrl = {});

// --- comparison with the quantum detector ---------------------------------------

/// Fractional excess R_model e_m / i_s - 1 of the model rate over the
/// linear rate at the same parameters. Throws InvalidParameter for x = 0.
double dark_fraction(DimensionlessIntensity x, Geometry model, const SeriesControl& ctrl = {});

/// eta * K * i_s.
double quantum_rate(double i_s, const QuantumDetectorParams& q);

}  // namespace photofpt
