#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "photofpt/analytic.hpp"

namespace photofpt::oracle {

namespace {

using boost::math::quadrature::gauss_kronrod;
using std::numbers::pi;

// Solves a tridiagonal system in place (Thomas algorithm). `lower[0]` and
// `upper[n-1]` are ignored.
void solve_tridiagonal(const std::vector<double>& lower, const std::vector<double>& diag,
                       const std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    std::vector<double> c(n);
    double denom = diag[0];
    c[0] = upper[0] / denom;
    rhs[0] /= denom;
    for (std::size_t i = 1; i < n; ++i) {
        denom = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / denom;
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

double integrate_survival(const DetectorParams& p, bool cube) {
    SeriesControl ctrl;
    ctrl.n_images = 40;
    const double unit = p.time_unit();
    auto survival = [&](double t) {
        if (t <= 0.0) return 1.0;
        const double l = axis_survival_image(t, p.i_s, p, ctrl).value;
        if (!cube) return l;
        const double k = axis_survival_image(t, 0.0, p, ctrl).value;
        return k * k * l;
    };
    const double breaks[] = {0.0, 0.05, 0.2, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < std::size(breaks); ++i) {
        total += gauss_kronrod<double, 31>::integrate(survival, breaks[i] * unit,
                                                      breaks[i + 1] * unit, 8, 1e-10);
    }
    return total;
}

}  // namespace

double pde_axis_survival(double t, double drift, const DetectorParams& p, const PdeGrid& grid) {
    p.validate();
    const double unit = p.time_unit();
    const double t0 = grid.start_time * unit;
    if (!(t > t0)) throw InvalidParameter("PDE oracle needs t > start_time");

    const int n = grid.interior_points;
    const double a = p.e_m;
    const double h = 2.0 * a / (n + 1);
    const double diff = 0.5 * p.sigma * p.sigma;

    const auto steps = static_cast<long>(std::ceil((t - t0) / (grid.time_step * unit)));
    const double dt = (t - t0) / static_cast<double>(steps);

    // L rho_i = diff (rho_{i+1} - 2 rho_i + rho_{i-1}) / h^2 - drift (rho_{i+1} - rho_{i-1}) / 2h
    const double lo_coef = diff / (h * h) + drift / (2.0 * h);
    const double mid_coef = -2.0 * diff / (h * h);
    const double up_coef = diff / (h * h) - drift / (2.0 * h);

    std::vector<double> rho(static_cast<std::size_t>(n));
    const double var0 = p.sigma * p.sigma * t0;
    for (int i = 0; i < n; ++i) {
        const double x = -a + (i + 1) * h - drift * t0;
        rho[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * var0)) / std::sqrt(2.0 * pi * var0);
    }

    const auto un = static_cast<std::size_t>(n);
    std::vector<double> lower(un, -0.5 * dt * lo_coef), diag(un, 1.0 - 0.5 * dt * mid_coef),
        upper(un, -0.5 * dt * up_coef), rhs(un);
    for (long s = 0; s < steps; ++s) {
        for (std::size_t i = 0; i < un; ++i) {
            const double left = i > 0 ? rho[i - 1] : 0.0;
            const double right = i + 1 < un ? rho[i + 1] : 0.0;
            rhs[i] = rho[i] + 0.5 * dt * (lo_coef * left + mid_coef * rho[i] + up_coef * right);
        }
        solve_tridiagonal(lower, diag, upper, rhs);
        rho.swap(rhs);
    }

    double mass = 0.0;
    for (double v : rho) mass += v;
    return mass * h;
}

double quadrature_mean_fpt_1d(const DetectorParams& p) { return integrate_survival(p, false); }

double quadrature_mean_fpt_3d(const DetectorParams& p) { return integrate_survival(p, true); }

double f3_bruteforce(double x, int k_max) {
    double sum = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        const double wk = k == k_max ? 0.5 : 1.0;
        for (int l = 0; l <= k_max; ++l) {
            const double wl = l == k_max ? 0.5 : 1.0;
            const double j = 2.0 * k + 1.0;
            const double q = 2.0 * l + 1.0;
            const double m = j * j + q * q;
            const double g = 1.0 - std::cosh(x) / std::cosh(std::sqrt(x * x + 0.25 * pi * pi * m));
            const double sign = (k + l) % 2 == 0 ? 1.0 : -1.0;
            sum += wk * wl * sign * g / (m * j * q);
        }
    }
    return sum;
}

double radial_sphere_mean_exit(const DetectorParams& p, int intervals) {
    p.validate();
    // u'' + (2/r) u' = -2/sigma^2 on [0, e_m]; at r = 0 the operator is 3 u''.
    const double a = p.e_m;
    const double h = a / intervals;
    const double source = -2.0 / (p.sigma * p.sigma);
    const auto n = static_cast<std::size_t>(intervals);  // unknowns u_0 .. u_{n-1}; u_n = 0
    std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, source * h * h);
    diag[0] = -6.0;
    upper[0] = 6.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double r = static_cast<double>(i) * h;
        lower[i] = 1.0 - h / r;
        diag[i] = -2.0;
        upper[i] = 1.0 + h / r;
    }
    solve_tridiagonal(lower, diag, upper, rhs);
    return rhs[0];
}

double ode_mean_fpt_1d(const DetectorParams& p, int intervals) {
    p.validate();
    const double a = p.e_m;
    const double h = 2.0 * a / intervals;
    const double diff = 0.5 * p.sigma * p.sigma;
    const auto n = static_cast<std::size_t>(intervals - 1);
    std::vector<double> lower(n, diff / (h * h) - p.i_s / (2.0 * h)),
        diag(n, -2.0 * diff / (h * h)), upper(n, diff / (h * h) + p.i_s / (2.0 * h)), rhs(n, -1.0);
    solve_tridiagonal(lower, diag, upper, rhs);
    return rhs[n / 2];  // node at E = 0 (intervals even)
}

double g_tau_ooura(double tau) {
    auto weight = [](double x) {
        const double d = x * x + 1.0;
        return x * x * x / (d * d * d * d);
    };
    double v = 0.0;
    if (tau == 0.0) {
        v = gauss_kronrod<double, 61>::integrate(weight, 0.0, std::numeric_limits<double>::infinity(),
                                                 15, 1e-14);
    } else {
        boost::math::quadrature::ooura_fourier_cos<double> integrator;
        v = integrator.integrate(weight, tau).first;
    }
    return 2.0 / (3.0 * pi) * v;
}

}  // namespace photofpt::oracle
