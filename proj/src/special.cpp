#include "photofpt/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace photofpt::special {

namespace {

constexpr double kSeriesCutoff = 1e-4;

// log erfc(u) for u >= 26, where erfc underflows: the asymptotic series
// erfc(u) ~ exp(-u^2)/(u sqrt(pi)) * sum (-1)^n (2n-1)!! / (2u^2)^n.
double log_erfc_asymptotic(double u) {
    const double inv = 1.0 / (2.0 * u * u);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 8; ++n) {
        term *= -(2.0 * n - 1.0) * inv;
        sum += term;
    }
    return -u * u - std::log(u * std::sqrt(std::numbers::pi)) + std::log(sum);
}

// log(1 - exp(a)) for a <= 0.
double log1mexp(double a) {
    if (a == -std::numeric_limits<double>::infinity()) return 0.0;
    return a > -std::numbers::ln2 ? std::log(-std::expm1(a)) : std::log1p(-std::exp(a));
}

}  // namespace

double log_ndtr(double z) {
    if (z > 5.0) return std::log1p(-0.5 * std::erfc(z / std::numbers::sqrt2));
    const double u = -z / std::numbers::sqrt2;
    if (u < 26.0) return std::log(0.5 * std::erfc(u));
    return log_erfc_asymptotic(u) - std::numbers::ln2;
}

double log_ndtr_diff(double hi, double lo) {
    if (!(hi > lo)) return -std::numeric_limits<double>::infinity();
    if (lo > 0.0) {
        // Upper tail: Phi(hi) - Phi(lo) = Q(lo) - Q(hi), Q(z) = Phi(-z).
        const double a = log_ndtr(-lo);
        const double b = log_ndtr(-hi);
        return a + log1mexp(b - a);
    }
    if (hi < 0.0) {
        const double a = log_ndtr(hi);
        const double b = log_ndtr(lo);
        return a + log1mexp(b - a);
    }
    // Interval straddles zero: no cancellation.
    const double q_hi = 0.5 * std::erfc(hi / std::numbers::sqrt2);
    const double p_lo = 0.5 * std::erfc(-lo / std::numbers::sqrt2);
    return std::log1p(-(q_hi + p_lo));
}

double tanhc(double x) {
    if (std::abs(x) < kSeriesCutoff) {
        const double x2 = x * x;
        return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
    }
    return std::tanh(x) / x;
}

}  // namespace photofpt::special
