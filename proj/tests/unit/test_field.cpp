#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <utility>
#include <numbers>

#include "oracles.hpp"
#include "photofpt/field.hpp"

using namespace photofpt;
using namespace photofpt::field;
using std::numbers::pi;

namespace {

// G(tau) from 30-digit oscillatory quadrature.
struct GRef {
    double tau, g;
};
constexpr GRef kGReference[] = {
    {0.05, 0.0176398710639402},   {0.1, 0.01750960514744},       {0.5, 0.0140094966442381},
    {1.0, 0.00687565478795893},   {2.0, -0.00363895942765184},   {5.0, -0.00219960629594218},
    {10.0, 0.000207648173753406}, {12.0, 0.000117230883526077},  {15.0, 4.19281153611749e-5},
    {17.0, 2.24723787412613e-5},  {20.0, 1.0269954390976e-5},    {30.0, 1.73135485053059e-6},
    {50.0, 2.10528235613971e-7},
};

double weight(double x) {
    const double d = x * x + 1.0;
    return x * x * x / (d * d * d * d);
}

}  // namespace

TEST_CASE("AtomModel") {
    CHECK(std::abs(AtomModel{}.density_normalization() - 1.0) < 1e-10);
    CHECK(std::abs(AtomModel{2.5, 1.0, 1.0}.density_normalization() - 1.0) < 1e-10);
    CHECK_THROWS_AS((AtomModel{0.0, 1.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((AtomModel{1.0, -1.0, 1.0}.validate()), InvalidParameter);
    const AtomModel m{2.0, 3.0, 4.0};
    CHECK(m.correlation_unit() == doctest::Approx(3.0 * 4.0 / 16.0));
    CHECK(m.sigma_unit() == doctest::Approx(3.0 * 8.0 / std::pow(2.0, 3.5)));
}

TEST_CASE("form factor") {
    CHECK(FormFactor::at(0.0).value == 0.0);
    CHECK(FormFactor::at(1e6).value < 1e-18);
    const double peak = 1.0 / std::sqrt(3.0);
    CHECK(FormFactor::at(peak).value > FormFactor::at(peak - 1e-4).value);
    CHECK(FormFactor::at(peak).value > FormFactor::at(peak + 1e-4).value);
}

TEST_CASE("correlation integrand peaks at sqrt(3/5)") {
    const double x0 = std::sqrt(0.6);
    // d/dx x^3/(x^2+1)^4 = x^2 (3 - 5 x^2) / (x^2+1)^5
    CHECK(std::abs(x0 * x0 * (3.0 - 5.0 * x0 * x0)) < 1e-15);
    CHECK(weight(x0) > weight(x0 - 1e-3));
    CHECK(weight(x0) > weight(x0 + 1e-3));
}

TEST_CASE("g_tau at zero") {
    const auto g0 = g_tau(0.0);
    CHECK(g0.converged);
    CHECK(g0.value == doctest::Approx(1.0 / (18.0 * pi)).epsilon(1e-12));
    CHECK(g0.value == doctest::Approx(0.0176838825657661).epsilon(1e-12));
    CHECK(g_tau_small(0.0) == doctest::Approx(1.0 / (18.0 * pi)).epsilon(1e-15));
}

TEST_CASE("g_tau reference values") {
    for (const auto& [tau, g] : kGReference) {
        const auto v = g_tau(tau);
        CHECK(v.converged);
        CHECK(v.value == doctest::Approx(g).epsilon(1e-9));
    }
}

TEST_CASE("g_tau agrees with the double-exponential Fourier rule") {
    for (double tau : {0.3, 1.0, 2.0, 4.0, 7.5, 10.0, 25.0}) {
        CHECK(g_tau(tau).value == doctest::Approx(oracle::g_tau_ooura(tau)).epsilon(1e-8));
    }
}

TEST_CASE("g_tau domain") {
    CHECK_THROWS_AS(g_tau(-1.0), InvalidParameter);
    CHECK_THROWS_AS(g_tau(NAN), InvalidParameter);
    CHECK(correlation(1.0).g == doctest::Approx(0.00687565478795893).epsilon(1e-9));
}

TEST_CASE("small-tau form") {
    CHECK(g_tau_small(1.0) == 0.0);
    CHECK(g_tau(0.1).value == doctest::Approx(0.99 / (18.0 * pi)).epsilon(1e-3));
    CHECK(g_tau_small(0.05) == doctest::Approx(g_tau(0.05).value).epsilon(1e-3));
    // Exact coefficient: -(1/2) int x^5 w / int x^3 w = -(1/2)(1/6)/(1/12) = -1.
    const double tau = 1e-2;
    const double coeff = (g_tau(tau).value / g_tau(0.0).value - 1.0) / (tau * tau);
    CHECK(coeff == doctest::Approx(-1.0).epsilon(0.01));
}

TEST_CASE("large-tau form is a damped cosine") {
    const double w = std::sqrt(0.6);
    for (int m = 0; m < 6; ++m) {
        const double tau = (pi / 2.0 + m * pi) / w;
        CHECK(std::abs(g_tau_large(tau)) < 1e-17);
    }
    // Envelope ratio over 5 units of tau, sampled at equal cosine phase.
    const double period = 2.0 * pi / w;
    const double t1 = 3.0, t2 = t1 + period;
    CHECK(g_tau_large(t2) / g_tau_large(t1) == doctest::Approx(std::exp(-2.0 * std::sqrt(2.0) * period / 5.0)));
    const double env5 = (g_tau_large(t1 + 5.0) / std::cos(w * (t1 + 5.0))) / (g_tau_large(t1) / std::cos(w * t1));
    CHECK(env5 == doctest::Approx(std::exp(-2.0 * std::sqrt(2.0))));
}

TEST_CASE("true large-tau behaviour is algebraic") {
    // The weight behaves as x^3 near x = 0, so G(tau) -> (2/3pi) * 6/tau^4 = 4/(pi tau^4).
    for (double tau = 10.0; tau <= 50.0; tau += 2.5) CHECK(g_tau(tau).value > 0.0);
    const double r50 = g_tau(50.0).value * std::pow(50.0, 4) * pi / 4.0;
    const double r100 = g_tau(100.0).value * std::pow(100.0, 4) * pi / 4.0;
    CHECK(r50 == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(r100 - 1.0) < std::abs(r50 - 1.0));
}

TEST_CASE("moment integrals") {
    const auto m = moment_integral();
    CHECK(m.agree);
    CHECK(std::abs(m.quadrature - m.closed_form) < 1e-10);
    CHECK(m.closed_form == doctest::Approx(5.0 * pi / 4096.0).epsilon(1e-14));
    CHECK(m.closed_form == doctest::Approx(0.00383495).epsilon(1e-6));
    CHECK(power_moment_quadrature(0, 1) == doctest::Approx(pi / 2.0).epsilon(1e-12));
    CHECK(power_moment_closed_form(0, 1) == doctest::Approx(pi / 2.0).epsilon(1e-14));
    CHECK(power_moment_closed_form(3, 4) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    for (auto [p, q] : {std::pair{2, 3}, std::pair{5, 5}, std::pair{3, 4}, std::pair{1, 2}}) {
        CHECK(std::abs(power_moment_quadrature(p, q) - power_moment_closed_form(p, q)) < 1e-10);
    }
    CHECK_THROWS_AS(power_moment_quadrature(3, 2), InvalidParameter);
}

TEST_CASE("sigma constant") {
    const auto s = sigma_const();
    CHECK(s.agree);
    CHECK(s.relative_difference < 1e-6);
    CHECK(s.sigma2_frequency == doctest::Approx(5.0 / (73728.0 * pi * pi)).epsilon(1e-9));
    CHECK(s.sigma2_time == doctest::Approx(s.sigma2_closed_form).epsilon(1e-6));
    CHECK(s.sigma_frequency > 1e-4);
    CHECK(s.sigma_frequency < 1e-2);
    CHECK(s.sigma_frequency == doctest::Approx(2.62131e-3).epsilon(1e-5));

    SUBCASE("scales as hbar c^(3/2) a^(-7/2)") {
        const AtomModel atom{2.0, 3.0, 4.0};
        const auto scaled = sigma_const(atom);
        CHECK(scaled.sigma_physical ==
              doctest::Approx(s.sigma_frequency * 3.0 * std::pow(4.0, 1.5) * std::pow(2.0, -3.5)).epsilon(1e-12));
    }
}
