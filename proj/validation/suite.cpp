#include "suite.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <cstdint>
#include <limits>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "photofpt/analytic.hpp"
#include "photofpt/field.hpp"
#include "photofpt/mc.hpp"

namespace photofpt::validation {

namespace {

using nlohmann::json;
using std::numbers::pi;

constexpr double kPi4Over128 = pi * pi * pi * pi / 128.0;
constexpr std::int64_t kPaths = 100000;
constexpr double kDt = 1e-3;

std::string num(double v, int digits = 6) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(digits) << v;
    return s.str();
}

CriterionResult start(int number, std::string title, std::string expected, std::string source,
                      std::string tolerance) {
    CriterionResult r;
    r.number = number;
    std::ostringstream id;
    id << "AC" << std::setw(2) << std::setfill('0') << number;
    r.id = id.str();
    r.title = std::move(title);
    r.expected = std::move(expected);
    r.source = std::move(source);
    r.tolerance = std::move(tolerance);
    return r;
}

mc::RunOptions run_options(const SuiteOptions& o) { return mc::RunOptions{o.workers}; }

DetectorParams unit_params(double x) { return DetectorParams::from_x(DimensionlessIntensity(x)); }

json estimate_json(const mc::FPTEstimate& e) {
    return {{"mean", e.mean},
            {"std_err", e.std_err},
            {"n_absorbed", e.n_absorbed},
            {"n_censored", e.n_censored},
            {"dt", e.dt_used}};
}

json richardson_json(const mc::RichardsonEstimate& r) {
    return {{"coarse", estimate_json(r.coarse)},
            {"fine", estimate_json(r.fine)},
            {"extrapolated", estimate_json(r.extrapolated)}};
}

// --- AC01 -------------------------------------------------------------------
CriterionResult slab_closed_form_vs_mc(const SuiteOptions& o) {
    auto r = start(1, "Slab mean FPT: closed form vs Richardson-extrapolated Monte Carlo",
                   "(e_m/i_s) tanh(x), limit 1 at x = 0; x in {0, 0.5, 1, 2, 5}", "closed-form",
                   "|z| <= 3, 1e5 paths, dt = 1e-3");
    double worst = 0.0;
    bool ok = true;
    for (double x : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        const auto p = unit_params(x);
        const auto cfg = mc::MCConfig::make(p, 1, mc::Boundary::interval, kDt, kPaths, o.seed);
        const auto est = mc::simulate_fpt_richardson(cfg, run_options(o));
        const double analytic = mean_fpt_1d(p);
        const double z = mc::zscore(analytic, est.extrapolated);
        worst = std::max(worst, std::abs(z));
        ok = ok && std::abs(z) <= 3.0 && est.extrapolated.reliable();
        r.data["points"].push_back(
            {{"x", x}, {"analytic", analytic}, {"z", z}, {"mc", richardson_json(est)}});
        r.notes.push_back("x=" + num(x) + ": analytic " + num(analytic, 8) + ", mc " +
                          num(est.extrapolated.mean, 8) + " +- " + num(est.extrapolated.std_err, 3) +
                          ", z = " + num(z, 3));
    }
    r.observed = "max |z| = " + num(worst, 3);
    r.passed = ok;
    return r;
}

// --- AC02 -------------------------------------------------------------------
CriterionResult cube_series_vs_mc(const SuiteOptions& o) {
    auto r = start(2, "Cube mean FPT: double series vs Richardson-extrapolated Monte Carlo",
                   "(128/pi^4) F(x) e_m^2/sigma^2; x in {0, 1, 3}", "closed-form",
                   "|z| <= 3, 1e5 paths, dt = 1e-3");
    double worst = 0.0;
    bool ok = true;
    for (double x : {0.0, 1.0, 3.0}) {
        const auto p = unit_params(x);
        const auto cfg = mc::MCConfig::make(p, 3, mc::Boundary::cube, kDt, kPaths, o.seed);
        const auto est = mc::simulate_fpt_richardson(cfg, run_options(o));
        const double analytic = mean_fpt_3d(p).require("mean_fpt_3d");
        const double z = mc::zscore(analytic, est.extrapolated);
        worst = std::max(worst, std::abs(z));
        ok = ok && std::abs(z) <= 3.0 && est.extrapolated.reliable();
        r.data["points"].push_back(
            {{"x", x}, {"analytic", analytic}, {"z", z}, {"mc", richardson_json(est)}});
        r.notes.push_back("x=" + num(x) + ": series " + num(analytic, 8) + ", mc " +
                          num(est.extrapolated.mean, 8) + " +- " + num(est.extrapolated.std_err, 3) +
                          ", z = " + num(z, 3));
    }
    r.observed = "max |z| = " + num(worst, 3);
    r.passed = ok;
    return r;
}

// --- AC03 -------------------------------------------------------------------
CriterionResult zero_intensity_cube(const SuiteOptions&) {
    auto r = start(3, "Zero-intensity cube mean FPT and dark rate",
                   "<t> = 0.49 e_m^2/sigma^2, R = 2.0 sigma^2/e_m^2", "quoted",
                   "+-0.005 on <t>, +-0.02 on R");
    const auto p = unit_params(0.0);
    const double t = mean_fpt_3d(p).require("mean_fpt_3d");
    const double rate = rate_3d(p).require("rate_3d");
    const bool t_ok = std::abs(t - 0.49) <= 0.005;
    const bool r_ok = std::abs(rate - 2.0) <= 0.02;
    r.observed = "<t> = " + num(t, 10) + ", R = " + num(rate, 10);
    r.data = {{"mean_fpt", t}, {"rate", rate}, {"mean_fpt_ok", t_ok}, {"rate_ok", r_ok}};
    if (!t_ok || !r_ok) {
        r.notes.push_back(
            "the (k,l) series converges to F(0) = " + num(f3_series(DimensionlessIntensity(0.0)).value, 15) +
            "; the same value follows from the triple spectral sum of int K^3 dt, from the "
            "survival quadrature (AC07) and from Monte Carlo (AC02). The quoted two-figure "
            "values are not reproduced.");
    }
    r.passed = t_ok && r_ok;
    return r;
}

// --- AC04 -------------------------------------------------------------------
CriterionResult large_x_asymptote(const SuiteOptions& o) {
    auto r = start(4, "Large-x asymptote of the cube series", "x F(x) 128/pi^4 -> 1", "quoted",
                   "< 1e-2 at x = 50, < 1e-3 at x = 500");
    const double constant = o.perturb_asymptote ? 1.02 * kPi4Over128 : kPi4Over128;
    const double d50 = std::abs(50.0 * f3_series(DimensionlessIntensity(50.0)).value / constant - 1.0);
    const double d500 = std::abs(500.0 * f3_series(DimensionlessIntensity(500.0)).value / constant - 1.0);
    r.observed = "rel. dev. " + num(d50, 3) + " at 50, " + num(d500, 3) + " at 500";
    r.data = {{"dev_50", d50}, {"dev_500", d500}, {"perturbed", o.perturb_asymptote}};
    r.passed = d50 < 1e-2 && d500 < 1e-3;
    return r;
}

// --- AC05 -------------------------------------------------------------------
CriterionResult high_intensity_slab(const SuiteOptions&) {
    auto r = start(5, "High-intensity slab rate", "R e_m / i_s = 1 + 2 exp(-2x) for x >= 8", "quoted",
                   "< 1e-6");
    double worst = 0.0;
    for (double x : {8.0, 9.0, 10.0, 12.0, 15.0, 20.0, 30.0, 50.0, 100.0}) {
        const auto p = unit_params(x);
        const double dev = std::abs(rate_1d(p) / (p.i_s / p.e_m) - (1.0 + 2.0 * std::exp(-2.0 * x)));
        worst = std::max(worst, dev);
        r.data["points"].push_back({{"x", x}, {"deviation", dev}});
    }
    r.observed = "max deviation " + num(worst, 3);
    r.passed = worst < 1e-6;
    return r;
}

// --- AC06 -------------------------------------------------------------------
CriterionResult dark_rate_threshold(const SuiteOptions&) {
    auto r = start(6, "Dark-rate fraction at the 10% threshold", "coth(1.5) - 1 in (0.10, 0.11)",
                   "quoted", "open interval (0.10, 0.11)");
    const double f = dark_fraction(DimensionlessIntensity(1.5), Geometry::d1);
    r.observed = num(f, 10);
    r.data = {{"dark_fraction_d1", f},
              {"dark_fraction_d3", dark_fraction(DimensionlessIntensity(1.5), Geometry::d3)}};
    r.passed = f > 0.10 && f < 0.11;
    return r;
}

// --- AC07 -------------------------------------------------------------------
CriterionResult survival_representations(const SuiteOptions&) {
    auto r = start(7, "Survival representations", "image = spectral; <t> = int survival dt",
                   "internal-consistency",
                   "max |image - spectral| < 1e-10 on t in [0.05, 10]; rel. error < 1e-3");
    const DetectorParams p{};
    double max_diff = 0.0;
    constexpr int kSamples = 400;
    for (int i = 0; i <= kSamples; ++i) {
        const double t = 0.05 * std::pow(200.0, static_cast<double>(i) / kSamples);
        const double img = axis_survival_image(t, 0.0, p).value;
        const double spec = axis_survival_spectral(t, p).value;
        max_diff = std::max(max_diff, std::abs(img - spec));
    }
    double worst_rel = 0.0;
    for (double x : {0.0, 1.0, 5.0}) {
        const auto px = unit_params(x);
        const double q1 = oracle::quadrature_mean_fpt_1d(px);
        const double s1 = mean_fpt_1d(px);
        const double q3 = oracle::quadrature_mean_fpt_3d(px);
        const double s3 = mean_fpt_3d(px).require("mean_fpt_3d");
        const double e1 = std::abs(q1 / s1 - 1.0);
        const double e3 = std::abs(q3 / s3 - 1.0);
        worst_rel = std::max({worst_rel, e1, e3});
        r.data["identity"].push_back({{"x", x},
                                      {"quadrature_1d", q1},
                                      {"closed_form_1d", s1},
                                      {"quadrature_3d", q3},
                                      {"series_3d", s3}});
    }
    r.data["max_image_spectral"] = max_diff;
    r.data["max_identity_rel_error"] = worst_rel;
    r.observed = "max |image - spectral| = " + num(max_diff, 3) + ", max identity rel. error = " +
                 num(worst_rel, 3);
    r.passed = max_diff < 1e-10 && worst_rel < 1e-3;
    return r;
}

// --- AC08 -------------------------------------------------------------------
CriterionResult pde_oracle(const SuiteOptions&) {
    auto r = start(8, "Finite-difference PDE vs image survival",
                   "Crank-Nicolson solve of the drift-diffusion equation, x in {0, 2}", "oracle",
                   "max |difference| < 1e-5");
    double worst = 0.0;
    for (double x : {0.0, 2.0}) {
        const auto p = unit_params(x);
        for (double t : {0.1, 0.25, 0.5, 1.0}) {
            const double pde = oracle::pde_axis_survival(t, p.i_s, p);
            const double img = axis_survival_image(t, p.i_s, p).value;
            worst = std::max(worst, std::abs(pde - img));
            r.data["points"].push_back({{"x", x}, {"t", t}, {"pde", pde}, {"image", img}});
        }
    }
    r.observed = "max |difference| = " + num(worst, 3);
    r.passed = worst < 1e-5;
    return r;
}

// --- AC09 -------------------------------------------------------------------
CriterionResult field_correlation(const SuiteOptions&) {
    auto r = start(9, "ZPF autocorrelation G(tau)",
                   "G(0) = 1/(18 pi); small-tau coefficient -1; on [10, 20] frequency sqrt(3/5) "
                   "and log-envelope slope -2 sqrt(2)/5",
                   "quoted", "G(0) +-1e-8; coefficient +-1%; frequency +-1%; slope +-2%");

    const double g0 = field::g_tau(0.0).value;
    const bool g0_ok = std::abs(g0 - 1.0 / (18.0 * pi)) <= 1e-8;

    // Least-squares fit G(tau)/G(0) - 1 = b tau^2 on [0, 0.05].
    double num_b = 0.0, den_b = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double tau = 0.005 * i;
        const double y = field::g_tau(tau).value / g0 - 1.0;
        num_b += y * tau * tau;
        den_b += tau * tau * tau * tau;
    }
    const double coeff = num_b / den_b;
    const bool coeff_ok = std::abs(coeff + 1.0) <= 0.01;

    // Oscillation on [10, 20]: zero crossings give the frequency, extrema of
    // |G| between crossings give the envelope.
    std::vector<double> taus, gs;
    for (int i = 0; i <= 1000; ++i) {
        taus.push_back(10.0 + 0.01 * i);
        gs.push_back(field::g_tau(taus.back()).value);
    }
    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        if ((gs[i] < 0.0) != (gs[i + 1] < 0.0)) {
            crossings.push_back(taus[i] - gs[i] * (taus[i + 1] - taus[i]) / (gs[i + 1] - gs[i]));
        }
    }
    double frequency = std::numeric_limits<double>::quiet_NaN();
    if (crossings.size() >= 2) {
        frequency = pi * static_cast<double>(crossings.size() - 1) / (crossings.back() - crossings.front());
    }

    std::vector<std::pair<double, double>> peaks;  // (tau, log|G|)
    if (crossings.size() >= 2) {
        std::size_t lobe_start = 0;
        for (std::size_t i = 1; i <= gs.size(); ++i) {
            const bool boundary = i == gs.size() || (gs[i] < 0.0) != (gs[i - 1] < 0.0);
            if (!boundary) continue;
            std::size_t best = lobe_start;
            for (std::size_t k = lobe_start; k < i; ++k) {
                if (std::abs(gs[k]) > std::abs(gs[best])) best = k;
            }
            if (best != 0 && best + 1 != gs.size()) peaks.emplace_back(taus[best], std::log(std::abs(gs[best])));
            lobe_start = i;
        }
    } else {
        for (std::size_t i = 0; i < gs.size(); ++i) peaks.emplace_back(taus[i], std::log(std::abs(gs[i])));
    }
    double slope = std::numeric_limits<double>::quiet_NaN();
    if (peaks.size() >= 2) {
        double mt = 0.0, my = 0.0;
        for (const auto& [t, y] : peaks) {
            mt += t;
            my += y;
        }
        mt /= static_cast<double>(peaks.size());
        my /= static_cast<double>(peaks.size());
        double sty = 0.0, stt = 0.0;
        for (const auto& [t, y] : peaks) {
            sty += (t - mt) * (y - my);
            stt += (t - mt) * (t - mt);
        }
        slope = sty / stt;
    }
    const double freq_target = std::sqrt(0.6);
    const double slope_target = -2.0 * std::numbers::sqrt2 / 5.0;
    const bool freq_ok = std::isfinite(frequency) && std::abs(frequency / freq_target - 1.0) <= 0.01;
    const bool slope_ok = std::isfinite(slope) && std::abs(slope / slope_target - 1.0) <= 0.02;

    r.observed = "G(0) = " + num(g0, 12) + ", coefficient " + num(coeff, 6) + ", crossings on [10,20]: " +
                 std::to_string(crossings.size()) + ", frequency " + num(frequency, 6) +
                 ", log-envelope slope " + num(slope, 6);
    r.data = {{"g0", g0},
              {"g0_ok", g0_ok},
              {"quadratic_coefficient", coeff},
              {"quadratic_ok", coeff_ok},
              {"zero_crossings_10_20", crossings.size()},
              {"frequency", std::isfinite(frequency) ? json(frequency) : json(nullptr)},
              {"frequency_ok", freq_ok},
              {"envelope_slope", std::isfinite(slope) ? json(slope) : json(nullptr)},
              {"envelope_ok", slope_ok},
              {"g_10", field::g_tau(10.0).value},
              {"g_20", field::g_tau(20.0).value},
              {"g_large_10", field::g_tau_large(10.0)},
              {"g_large_20", field::g_tau_large(20.0)}};
    if (!freq_ok || !slope_ok) {
        r.notes.push_back(
            "G(tau) has no sign change on [10, 20] and decays algebraically: the x^3 behaviour "
            "of the weight at x = 0 gives G(tau) ~ 4/(pi tau^4), e.g. tau^4 G(tau) pi/4 = " +
            num(std::pow(20.0, 4) * field::g_tau(20.0).value * pi / 4.0, 6) +
            " at tau = 20, so no damped-cosine fit exists in this window.");
    }
    r.passed = g0_ok && coeff_ok && freq_ok && slope_ok;
    return r;
}

// --- AC10 -------------------------------------------------------------------
CriterionResult moment_integral(const SuiteOptions&) {
    auto r = start(10, "Moment integral int x^6/(x^2+1)^8 dx", "1/2 B(7/2, 9/2) = 5 pi / 4096",
                   "closed-form", "< 1e-10");
    const auto m = field::moment_integral();
    const double diff = std::abs(m.quadrature - m.closed_form);
    r.observed = "quadrature " + num(m.quadrature, 15) + ", closed form " + num(m.closed_form, 15) +
                 ", |diff| = " + num(diff, 3);
    r.data = {{"quadrature", m.quadrature},
              {"closed_form", m.closed_form},
              {"five_pi_over_4096", 5.0 * pi / 4096.0}};
    r.passed = diff < 1e-10 && std::abs(m.closed_form - 5.0 * pi / 4096.0) < 1e-15;
    return r;
}

// --- AC11 -------------------------------------------------------------------
CriterionResult sigma_constant(const SuiteOptions&) {
    auto r = start(11, "White-noise amplitude sigma, two routes",
                   "time-domain and frequency-domain sigma^2 agree", "internal-consistency",
                   "relative difference < 1e-6");
    const auto s = field::sigma_const();
    r.observed = "sigma = " + num(s.sigma_frequency, 8) + " hbar c^(3/2) a^(-7/2), rel. diff " +
                 num(s.relative_difference, 3);
    r.data = {{"sigma2_time_domain", s.sigma2_time},
              {"sigma2_frequency_domain", s.sigma2_frequency},
              {"sigma2_closed_form", s.sigma2_closed_form},
              {"sigma_natural_units", s.sigma_frequency},
              {"relative_difference", s.relative_difference},
              {"quoted_appendix_value", field::SigmaReport::kQuotedAppendix},
              {"quoted_order_of_magnitude", field::SigmaReport::kQuotedOrder}};
    r.notes.push_back("computed sigma = " + num(s.sigma_frequency, 6) + " vs quoted appendix value " +
                      num(field::SigmaReport::kQuotedAppendix) + " (ratio " +
                      num(s.sigma_frequency / field::SigmaReport::kQuotedAppendix, 4) +
                      ") and quoted order of magnitude 1e-3; the computed value is consistent with "
                      "the order of magnitude and not with the appendix figure.");
    r.passed = s.agree;
    return r;
}

// --- AC12 -------------------------------------------------------------------
CriterionResult renewal_rate(const SuiteOptions& o) {
    auto r = start(12, "Renewal count rate of the simulated event stream", "1/<t> (slab), x in {0, 2}",
                   "closed-form", "|rate - 1/<t>| <= 3 std_err over horizon 1e4 <t>, dt = 1e-5");
    bool ok = true;
    double worst = 0.0;
    for (double x : {0.0, 2.0}) {
        const auto p = unit_params(x);
        const double mean = mean_fpt_1d(p);
        const auto cfg = mc::MCConfig::make(p, 1, mc::Boundary::interval, 1e-5, 100, o.seed);
        const auto stream = mc::simulate_event_stream(cfg, 1e4 * mean, run_options(o));
        const auto rate = mc::renewal_rate(stream);
        const double z = (rate.rate - 1.0 / mean) / rate.std_err;
        worst = std::max(worst, std::abs(z));
        ok = ok && std::abs(z) <= 3.0 && stream.n_censored == 0;
        r.data["points"].push_back({{"x", x},
                                    {"expected_rate", 1.0 / mean},
                                    {"rate", rate.rate},
                                    {"std_err", rate.std_err},
                                    {"events", rate.n_events},
                                    {"z", z}});
        r.notes.push_back("x=" + num(x) + ": rate " + num(rate.rate, 7) + " +- " + num(rate.std_err, 3) +
                          " vs " + num(1.0 / mean, 7) + " (" + std::to_string(rate.n_events) +
                          " events), z = " + num(z, 3));
    }
    r.observed = "max |z| = " + num(worst, 3);
    r.passed = ok;
    return r;
}

// --- AC13 -------------------------------------------------------------------
CriterionResult sphere_vs_cube(const SuiteOptions& o) {
    auto r = start(13, "Sphere vs cube boundary on common random numbers",
                   "sphere <= cube at every x; driftless sphere = radial ODE mean exit time",
                   "oracle", "|z| <= 3 for the sphere; no containment violations");
    bool ok = true;
    for (double x : {0.0, 1.0, 3.0}) {
        const auto p = unit_params(x);
        const auto base = mc::MCConfig::make(p, 3, mc::Boundary::cube, kDt, kPaths, o.seed);
        const auto cmp = mc::simulate_fpt_sphere_vs_cube(p, base, run_options(o));
        const bool ordered = cmp.containment_violations == 0 &&
                             cmp.sphere.extrapolated.mean <= cmp.cube.extrapolated.mean;
        ok = ok && ordered;
        json point = {{"x", x},
                      {"sphere", richardson_json(cmp.sphere)},
                      {"cube", richardson_json(cmp.cube)},
                      {"ratio", cmp.ratio},
                      {"ratio_std_err", cmp.ratio_std_err},
                      {"containment_violations", cmp.containment_violations}};
        std::string note = "x=" + num(x) + ": sphere/cube = " + num(cmp.ratio, 2) + " +- " +
                           num(cmp.ratio_std_err, 1);
        if (x == 0.0) {
            const double radial = oracle::radial_sphere_mean_exit(p);
            const double z = mc::zscore(radial, cmp.sphere.extrapolated);
            ok = ok && std::abs(z) <= 3.0;
            point["radial_oracle"] = radial;
            point["z"] = z;
            note += ", sphere " + num(cmp.sphere.extrapolated.mean, 6) + " vs radial ODE " + num(radial, 8) +
                    " (z = " + num(z, 3) + ")";
        }
        r.data["points"].push_back(point);
        r.notes.push_back(note);
    }
    r.observed = r.notes.empty() ? "" : r.notes.front();
    r.passed = ok;
    return r;
}

using CriterionFn = CriterionResult (*)(const SuiteOptions&);

constexpr CriterionFn kCriteria[kCriterionCount] = {
    slab_closed_form_vs_mc, cube_series_vs_mc,        zero_intensity_cube, large_x_asymptote,
    high_intensity_slab,    dark_rate_threshold,      survival_representations, pde_oracle,
    field_correlation,      moment_integral,          sigma_constant,      renewal_rate,
    sphere_vs_cube};

}  // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

nlohmann::json ValidationReport::to_json() const {
    json out = {{"all_passed", all_passed()}, {"criteria", json::array()}};
    for (const auto& c : criteria) {
        out["criteria"].push_back({{"id", c.id},
                                   {"title", c.title},
                                   {"expected", c.expected},
                                   {"source", c.source},
                                   {"observed", c.observed},
                                   {"tolerance", c.tolerance},
                                   {"passed", c.passed},
                                   {"notes", c.notes},
                                   {"data", c.data}});
    }
    return out;
}

std::string summary_line(const CriterionResult& r) {
    return std::string(r.passed ? "PASS " : "FAIL ") + r.id + "  " + r.title + "  [" + r.observed + "]";
}

void ValidationReport::write_text(std::ostream& out) const {
    for (const auto& c : criteria) {
        out << summary_line(c) << '\n';
        out << "     expected (" << c.source << "): " << c.expected << '\n';
        out << "     tolerance: " << c.tolerance << '\n';
        for (const auto& n : c.notes) out << "     - " << n << '\n';
    }
    const auto passed = std::count_if(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
    out << passed << "/" << criteria.size() << " criteria passed\n";
}

ValidationReport run_acceptance(const SuiteOptions& options) {
    ValidationReport report;
    for (int i = 1; i <= kCriterionCount; ++i) {
        if (!options.only.empty() && !options.only.contains(i)) continue;
        CriterionResult r = kCriteria[i - 1](options);
        if (options.on_result) options.on_result(r);
        report.criteria.push_back(std::move(r));
    }
    return report;
}

}  // namespace photofpt::validation
