#include "photofpt/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace photofpt::field {

namespace {

using std::numbers::pi;
using boost::math::quadrature::gauss_kronrod;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPanelTol = 1e-13;
constexpr unsigned kPanelDepth = 12;

// Panels ending before this abscissa are summed directly: past it the weight
// x^3/(x^2+1)^4 is monotonically decreasing (its maximum sits at sqrt(3/5)),
// so the remaining panel integrals alternate with decreasing magnitude.
constexpr double kAlternatingFrom = 3.0;
constexpr int kEulerPanels = 40;

double weight(double x) {
    const double d = x * x + 1.0;
    const double d2 = d * d;
    return x * x * x / (d2 * d2);
}

struct Panel {
    double value;
    double error;
};

Panel integrate_panel(double tau, double lo, double hi) {
    double err = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(
        [tau](double x) { return weight(x) * std::cos(tau * x); }, lo, hi, kPanelDepth, kPanelTol,
        &err);
    return {v, err};
}

// Euler transform of an alternating series given by its terms, through
// repeated averaging of the partial sums. Returns the sum and an estimate of
// its error from the last averaging level.
std::pair<double, double> euler_sum(const std::vector<double>& terms) {
    std::vector<double> level(terms.size());
    double s = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        s += terms[i];
        level[i] = s;
    }
    while (level.size() > 2) {
        for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
        level.pop_back();
    }
    return {0.5 * (level[0] + level[1]), 0.5 * std::abs(level[1] - level[0])};
}

}  // namespace

void AtomModel::validate() const {
    auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!ok(a) || !ok(hbar) || !ok(c)) throw InvalidParameter("a, hbar and c must be finite and > 0");
}

double AtomModel::density(double r) const {
    return std::exp(-r / a) / (8.0 * pi * a * a * a);
}

double AtomModel::density_normalization() const {
    validate();
    return gauss_kronrod<double, 61>::integrate(
        [this](double r) { return 4.0 * pi * r * r * density(r); }, 0.0, kInf, 15, 1e-14);
}

double AtomModel::correlation_unit() const { return hbar * c / (a * a * a * a); }

double AtomModel::sigma_unit() const { return hbar * std::pow(c, 1.5) * std::pow(a, -3.5); }

FormFactor FormFactor::at(double x) {
    const double d = x * x + 1.0;
    return {x, x / (4.0 * pi * d * d)};
}

SeriesValue g_tau(double tau, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!(std::isfinite(tau) && tau >= 0.0)) throw InvalidParameter("tau must be finite and >= 0");
    constexpr double kPrefactor = 2.0 / (3.0 * pi);

    SeriesValue out;
    if (tau == 0.0) {
        double err = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(weight, 0.0, kInf, 15, 1e-14, &err);
        out.value = kPrefactor * v;
        out.tail = kPrefactor * err;
        out.terms = 1;
        out.converged = ctrl.accepts(out.value, out.tail);
        return out;
    }

    // Zeros of cos(tau x) at (m + 1/2) pi / tau.
    auto zero = [tau](int m) { return (m + 0.5) * pi / tau; };

    double direct = 0.0;
    double quad_err = 0.0;
    double lo = 0.0;
    int m = 0;
    while (lo < kAlternatingFrom || m < 2) {
        const Panel p = integrate_panel(tau, lo, zero(m));
        direct += p.value;
        quad_err += p.error;
        lo = zero(m);
        ++m;
    }

    std::vector<double> tail_terms;
    tail_terms.reserve(kEulerPanels);
    for (int i = 0; i < kEulerPanels; ++i) {
        const Panel p = integrate_panel(tau, zero(m - 1 + i), zero(m + i));
        tail_terms.push_back(p.value);
        quad_err += p.error;
    }
    const auto [tail_sum, euler_err] = euler_sum(tail_terms);

    out.value = kPrefactor * (direct + tail_sum);
    out.tail = kPrefactor * (quad_err + euler_err);
    out.terms = m + kEulerPanels;
    out.converged = ctrl.accepts(out.value, out.tail);
    return out;
}

CorrelationSample correlation(double tau, const SeriesControl& ctrl) {
    return {tau, g_tau(tau, ctrl).require("g_tau")};
}

double g_tau_small(double tau) { return (1.0 - tau * tau) / (18.0 * pi); }

double g_tau_large(double tau) {
    return 25.0 / 512.0 * std::sqrt(0.3) * std::exp(-2.0 * std::numbers::sqrt2 * tau / 5.0) *
           std::cos(std::sqrt(0.6) * tau);
}

double power_moment_quadrature(int p, int q) {
    if (p < 0 || 2 * q <= p + 1) throw InvalidParameter("moment integral diverges");
    return gauss_kronrod<double, 61>::integrate(
        [p, q](double x) { return std::pow(x, p) / std::pow(x * x + 1.0, q); }, 0.0, kInf, 15,
        1e-15);
}

double power_moment_closed_form(int p, int q) {
    if (p < 0 || 2 * q <= p + 1) throw InvalidParameter("moment integral diverges");
    const double alpha = 0.5 * (p + 1);
    return 0.5 * std::beta(alpha, q - alpha);
}

MomentIntegral moment_integral() {
    MomentIntegral out;
    out.quadrature = power_moment_quadrature(6, 8);
    out.closed_form = power_moment_closed_form(6, 8);
    out.agree = std::abs(out.quadrature - out.closed_form) < 1e-10;
    return out;
}

SigmaReport sigma_const(const AtomModel& atom, const SeriesControl& ctrl) {
    atom.validate();
    SigmaReport out;

    // Time domain: sigma^2 = (c^2 / 8 pi^2) int_{-inf}^{inf} F(t)^2 dt with
    // F(t) = G(|t| c / a); in natural units this is (1 / 4 pi^2) int_0^inf G^2.
    auto g2 = [&ctrl](double tau) {
        const double g = g_tau(tau, ctrl).value;
        return g * g;
    };
    const double breaks[] = {0.0, 1.0, 2.5, 5.0, 10.0, 20.0, 40.0};
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < std::size(breaks); ++i) {
        integral += gauss_kronrod<double, 31>::integrate(g2, breaks[i], breaks[i + 1], 10, 1e-12);
    }
    // G(tau) ~ 4 / (pi tau^4) beyond the last break, so the rest of the G^2
    // integral is G(T)^2 T / 7.
    const double t_end = breaks[std::size(breaks) - 1];
    out.time_tail = g2(t_end) * t_end / 7.0;
    integral += out.time_tail;
    out.sigma2_time = integral / (4.0 * pi * pi);

    // Frequency domain: F(t) = (32 pi hbar c / 3 a^2) int_0^inf x cos(tau x) I(x)^2 dx,
    // and int_{-inf}^{inf} (int_0^inf f cos)^2 dtau = pi int_0^inf f^2, giving
    // sigma^2 = (c^2 / 8 pi^2) (a / c) (32 pi / 3)^2 pi int_0^inf x^2 I(x)^4 dx.
    const double form_moment = gauss_kronrod<double, 61>::integrate(
        [](double x) {
            const double ff = FormFactor::at(x).value;
            return x * x * ff * ff * ff * ff;
        },
        0.0, kInf, 15, 1e-15);
    const double chain = (1.0 / (8.0 * pi * pi)) * std::pow(32.0 * pi / 3.0, 2) * pi;
    out.sigma2_frequency = chain * form_moment;
    out.sigma2_closed_form = moment_integral().closed_form / (18.0 * pi * pi * pi);

    out.sigma_time = std::sqrt(out.sigma2_time);
    out.sigma_frequency = std::sqrt(out.sigma2_frequency);
    out.relative_difference =
        std::abs(out.sigma2_time - out.sigma2_frequency) / std::abs(out.sigma2_frequency);
    out.agree = out.relative_difference < 1e-6;
    out.sigma_physical = out.sigma_frequency * atom.sigma_unit();
    return out;
}

}  // namespace photofpt::field
