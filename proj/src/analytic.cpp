#include "photofpt/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "photofpt/special.hpp"

namespace photofpt {

namespace {

using std::numbers::pi;

// pi^4 / 128: large-x limit of x F(x), and the prefactor linking F to <t>.
constexpr double kPi4Over128 = pi * pi * pi * pi / 128.0;

void require_positive_time(double t) {
    if (!(std::isfinite(t) && t > 0.0)) throw InvalidParameter("t must be finite and > 0");
}

// cosh(x) / cosh(y) for 0 <= x <= y, without overflow.
double cosh_ratio(double x, double y) {
    return std::exp(x - y) * (1.0 + std::exp(-2.0 * x)) / (1.0 + std::exp(-2.0 * y));
}

// One term of the correction double sum
//   (-1)^{k+l} / ((2k+1)(2l+1)[(2k+1)^2 + (2l+1)^2]) * cosh x / cosh y_kl.
double correction_term(double x, int k, int l) {
    const double j = 2.0 * k + 1.0;
    const double q = 2.0 * l + 1.0;
    const double m = j * j + q * q;
    const double y = std::sqrt(x * x + 0.25 * pi * pi * m);
    const double sign = ((k + l) % 2 == 0) ? 1.0 : -1.0;
    return sign * cosh_ratio(x, y) / (j * q * m);
}

double ring_magnitude(double x, int r) {
    double s = 0.0;
    for (int i = 0; i <= r; ++i) {
        s += std::abs(correction_term(x, r, i));
        if (i != r) s += std::abs(correction_term(x, i, r));
    }
    return s;
}

}  // namespace

double mean_fpt_1d(const DetectorParams& p) {
    p.validate();
    return p.time_unit() * special::tanhc(p.x().value());
}

double rate_1d(const DetectorParams& p) { return p.cross_section / mean_fpt_1d(p); }

double rate_1d_asymptotic(const DetectorParams& p, Regime regime) {
    p.validate();
    if (regime == Regime::low) return p.cross_section * p.sigma * p.sigma / (p.e_m * p.e_m);
    const double x = p.x().value();
    return p.cross_section * (p.i_s / p.e_m) * (1.0 + 2.0 * std::exp(-2.0 * x));
}

SeriesValue axis_survival_image(double t, double drift, const DetectorParams& p,
                                const SeriesControl& ctrl) {
    p.validate();
    ctrl.validate();
    require_positive_time(t);
    if (!std::isfinite(drift)) throw InvalidParameter("drift must be finite");

    const double a = p.e_m;
    const double s = p.sigma * std::sqrt(t);
    const double shift = drift * t;
    // Image n carries weight exp(-2 n drift a / sigma^2) after completing the
    // square; kept in log space so large |n| x cannot overflow.
    const double log_weight = 2.0 * drift * a / (p.sigma * p.sigma);

    auto term = [&](int n) {
        const double centre = 2.0 * n * a - shift;
        const double lf = -n * log_weight + special::log_ndtr_diff((centre + a) / s, (centre - a) / s);
        const double v = std::exp(lf);
        return (n % 2 == 0) ? v : -v;
    };

    const int n_max = ctrl.n_images;
    double sum = term(0);
    double prev_pos = std::abs(sum), prev_neg = std::abs(sum);
    bool decreasing = true;
    for (int n = 1; n <= n_max; ++n) {
        const double tp = term(n);
        const double tn = term(-n);
        sum += tp + tn;
        prev_pos = std::abs(tp);
        prev_neg = std::abs(tn);
    }
    const double next_pos = std::abs(term(n_max + 1));
    const double next_neg = std::abs(term(-(n_max + 1)));
    if (next_pos > prev_pos || next_neg > prev_neg) decreasing = false;

    SeriesValue out;
    out.value = std::clamp(sum, 0.0, 1.0);
    out.tail = next_pos + next_neg;
    out.terms = 2 * n_max + 1;
    out.converged = decreasing && ctrl.accepts(out.value, out.tail);
    return out;
}

SeriesValue axis_survival_spectral(double t, const DetectorParams& p, const SeriesControl& ctrl,
                                   double drift) {
    p.validate();
    ctrl.validate();
    require_positive_time(t);
    if (drift != 0.0) {
        throw InvalidParameter("the spectral survival factor is only available for zero drift");
    }

    // Mode k decays at (2k+1)^2 pi^2 sigma^2 / (8 e_m^2).
    const double rate = pi * pi * p.sigma * p.sigma * t / (8.0 * p.e_m * p.e_m);
    const double stop = 0.01 * std::min(ctrl.abs_tol, ctrl.rel_tol);
    constexpr int kMaxTerms = 1 << 22;

    SeriesValue out;
    double sum = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    int k = 0;
    for (; k < kMaxTerms; ++k) {
        const double j = 2.0 * k + 1.0;
        const double mag = 4.0 / (pi * j) * std::exp(-j * j * rate);
        if (mag <= stop) {
            tail = mag;
            break;
        }
        sum += (k % 2 == 0) ? mag : -mag;
    }
    out.value = std::clamp(sum, 0.0, 1.0);
    out.tail = tail;
    out.terms = k;
    out.converged = ctrl.accepts(out.value, out.tail);
    return out;
}

SurvivalFactors survival_3d(double t, const DetectorParams& p, const SeriesControl& ctrl) {
    const SeriesValue k = axis_survival_image(t, 0.0, p, ctrl);
    const SeriesValue l = axis_survival_image(t, p.i_s, p, ctrl);
    SurvivalFactors out;
    out.t = t;
    out.k_axis = k.value;
    out.l_axis = l.value;
    out.tail = 2.0 * k.tail + l.tail;
    out.converged = k.converged && l.converged;
    return out;
}

SeriesValue f3_series(DimensionlessIntensity xv, const SeriesControl& ctrl) {
    ctrl.validate();
    const double x = xv.value();
    const int kmax = ctrl.kl_max;

    // F = sum_{k,l} c_kl (1 - cosh x / cosh y_kl) with
    // c_kl = (-1)^{k+l} / (j q (j^2 + q^2)), j = 2k+1, q = 2l+1. The c_kl part
    // is summed over k in closed form,
    //   sum_k (-1)^k / (j (j^2 + q^2)) = (pi / (4 q^2)) (1 - sech(pi q / 2)),
    // and then over l using sum_l (-1)^l / q^3 = pi^3 / 32. What remains is
    // a sech series and a cosh-ratio double series, both decaying
    // exponentially in k and l.
    double sech_sum = 0.0;
    for (int l = 0; l <= kmax; ++l) {
        const double q = 2.0 * l + 1.0;
        const double v = 1.0 / (std::cosh(0.5 * pi * q) * q * q * q);
        sech_sum += (l % 2 == 0) ? v : -v;
    }
    const double q_next = 2.0 * kmax + 3.0;
    const double sech_tail = 1.0 / (std::cosh(0.5 * pi * q_next) * q_next * q_next * q_next);
    const double base = 0.25 * pi * (pi * pi * pi / 32.0 - sech_sum);

    double correction = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        for (int l = 0; l <= kmax; ++l) correction += correction_term(x, k, l);
    }

    // Remainder outside the square, from the next two rings and their ratio.
    const double r1 = ring_magnitude(x, kmax + 1);
    const double r2 = ring_magnitude(x, kmax + 2);
    double ring_tail = 0.0;
    if (r1 > 0.0) {
        const double rho = r2 / r1;
        ring_tail = rho < 1.0 ? r1 + r2 / (1.0 - rho) : std::numeric_limits<double>::infinity();
    }

    SeriesValue out;
    out.value = base - correction;
    out.tail = 0.25 * pi * sech_tail + ring_tail;
    out.terms = (kmax + 1) * (kmax + 1);
    out.converged = ctrl.accepts(out.value, out.tail);
    return out;
}

SeriesValue mean_fpt_3d(const DetectorParams& p, const SeriesControl& ctrl) {
    p.validate();
    SeriesValue f = f3_series(p.x(), ctrl);
    const double scale = p.time_unit() / kPi4Over128;
    f.value *= scale;
    f.tail *= scale;
    return f;
}

SeriesValue rate_3d(const DetectorParams& p, const SeriesControl& ctrl) {
    const SeriesValue t = mean_fpt_3d(p, ctrl);
    SeriesValue out = t;
    out.value = p.cross_section / t.value;
    out.tail = out.value * t.tail / t.value;
    return out;
}

double dark_fraction(DimensionlessIntensity x, Geometry model, const SeriesControl& ctrl) {
    const double xv = x.value();
    if (!(xv > 0.0)) throw InvalidParameter("dark fraction diverges at x = 0");
    if (model == Geometry::d1) return 2.0 / std::expm1(2.0 * xv);  // coth(x) - 1
    const double f = f3_series(x, ctrl).require("f3_series");
    return kPi4Over128 / (xv * f) - 1.0;
}

double quantum_rate(double i_s, const QuantumDetectorParams& q) {
    q.validate();
    if (!(std::isfinite(i_s) && i_s >= 0.0)) throw InvalidParameter("i_s must be finite and >= 0");
    return q.eta * q.k_const * i_s;
}

}  // namespace photofpt
