#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "photofpt/analytic.hpp"
#include "photofpt/field.hpp"
#include "photofpt/mc.hpp"
#include "suite.hpp"

#ifndef PHOTOFPT_VERSION
#define PHOTOFPT_VERSION "unknown"
#endif

namespace photofpt::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    double e_m = 1.0;
    double sigma = 1.0;
    std::optional<double> i_s;
    double cross_section = 1.0;
    double eta = 1.0;
    std::uint64_t seed = mc::kDefaultSeed;
    std::string out;
    std::string format = "json";
    unsigned threads = 0;
};

// Sweeps take their intensities from the grid, so only rate and mc get --is.
void add_physics_flags(CLI::App* cmd, CommonFlags& f, bool with_is) {
    cmd->add_option("--em", f.e_m, "threshold energy e_m")->capture_default_str();
    cmd->add_option("--sigma", f.sigma, "noise amplitude sigma")->capture_default_str();
    if (with_is) cmd->add_option("--is", f.i_s, "signal intensity i_s")->required();
    cmd->add_option("--cross-section", f.cross_section, "detector cross-section A")->capture_default_str();
}

void add_seed_flag(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--seed", f.seed, "random seed (default 20071010)")->capture_default_str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "' for writing");
    return file;
}

DetectorParams params_from(const CommonFlags& f) {
    DetectorParams p{f.e_m, f.sigma, f.i_s.value_or(0.0), f.cross_section};
    p.validate();
    return p;
}

QuantumDetectorParams quantum_from(const CommonFlags& f) {
    // K eta = 1/e_m: the quantum detector with the same high-intensity rate.
    QuantumDetectorParams q{f.eta, 1.0 / (f.eta * f.e_m)};
    q.validate();
    return q;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json optional_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// One row of the rate curve. Dark fractions are infinite at x = 0.
struct RateRow {
    double i_s, x, rate_1d, rate_3d, rate_quantum, dark_1d, dark_3d, mean_1d, mean_3d;
};

RateRow rate_row(const DetectorParams& p, const QuantumDetectorParams& q) {
    RateRow r{};
    r.i_s = p.i_s;
    r.x = p.x().value();
    r.mean_1d = mean_fpt_1d(p);
    r.rate_1d = rate_1d(p);
    r.mean_3d = mean_fpt_3d(p).require("mean_fpt_3d");
    r.rate_3d = p.cross_section / r.mean_3d;
    r.rate_quantum = quantum_rate(p.i_s, q);
    const double inf = std::numeric_limits<double>::infinity();
    if (r.x > 0.0) {
        const DimensionlessIntensity x(r.x);
        r.dark_1d = dark_fraction(x, Geometry::d1);
        r.dark_3d = dark_fraction(x, Geometry::d3);
    } else {
        r.dark_1d = r.dark_3d = inf;
    }
    return r;
}

json params_json(const DetectorParams& p) {
    return {{"e_m", p.e_m}, {"sigma", p.sigma}, {"i_s", p.i_s}, {"cross_section", p.cross_section}};
}

json row_json(const RateRow& r) {
    return {{"i_s", r.i_s},
            {"x", r.x},
            {"mean_fpt_1d", r.mean_1d},
            {"mean_fpt_3d", r.mean_3d},
            {"rate_1d", r.rate_1d},
            {"rate_3d", r.rate_3d},
            {"rate_quantum", r.rate_quantum},
            {"dark_fraction_1d", optional_number(r.dark_1d)},
            {"dark_fraction_3d", optional_number(r.dark_3d)}};
}

std::vector<double> make_grid(double lo, double hi, int points, const std::string& kind, const char* what) {
    if (points < 1) throw UsageError(std::string("--points must be >= 1 for ") + what);
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw UsageError(std::string("invalid ") + what + " range");
    if (points == 1 && lo != hi) throw UsageError("a single-point grid needs min == max");
    if (kind == "log" && !(lo > 0.0)) throw UsageError(std::string("log grid needs ") + what + " min > 0");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        grid[static_cast<std::size_t>(i)] =
            kind == "log" ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

void write_csv_row(std::ostream& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out << ',';
        out << format_double(v);
        first = false;
    }
    out << '\n';
}

// --- rate -------------------------------------------------------------------
int cmd_rate(const CommonFlags& f, std::ostream& out) {
    const auto p = params_from(f);
    const auto row = rate_row(p, quantum_from(f));
    json j = row_json(row);
    j["params"] = params_json(p);
    j["time_unit"] = p.time_unit();
    out << j.dump(2) << '\n';
    return kOk;
}

// --- sweep ------------------------------------------------------------------
struct SweepFlags {
    double x_min = 0.01;
    double x_max = 100.0;
    int points = 50;
    std::string grid = "log";
};

int cmd_sweep(const CommonFlags& f, const SweepFlags& s, std::ostream& out) {
    auto base = params_from(f);
    const auto q = quantum_from(f);
    const auto xs = make_grid(s.x_min, s.x_max, s.points, s.grid, "x");

    std::vector<RateRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        DetectorParams p = base;
        p.i_s = x * p.sigma * p.sigma / p.e_m;
        rows.push_back(rate_row(p, q));
    }

    const SeriesControl ctrl;
    json meta = {{"params", params_json(base)},
                 {"quantum", {{"eta", q.eta}, {"k_const", q.k_const}}},
                 {"grid", {{"kind", s.grid}, {"x_min", s.x_min}, {"x_max", s.x_max}, {"points", s.points}}},
                 {"ctrl",
                  {{"n_images", ctrl.n_images},
                   {"kl_max", ctrl.kl_max},
                   {"abs_tol", ctrl.abs_tol},
                   {"rel_tol", ctrl.rel_tol}}},
                 {"seed", f.seed},
                 {"timestamp", utc_timestamp()},
                 {"version", PHOTOFPT_VERSION}};

    if (f.format == "json") {
        json doc = {{"metadata", meta}, {"rows", json::array()}};
        for (const auto& r : rows) doc["rows"].push_back(row_json(r));
        if (f.out.empty()) {
            out << doc.dump(2) << '\n';
        } else {
            open_output(f.out) << doc.dump(2) << '\n';
        }
        return kOk;
    }

    std::ostringstream csv;
    csv << "i_s,x,rate_1d,rate_3d,rate_quantum,dark_fraction_1d,dark_fraction_3d,mean_fpt_1d,mean_fpt_3d\n";
    for (const auto& r : rows) {
        write_csv_row(csv, {r.i_s, r.x, r.rate_1d, r.rate_3d, r.rate_quantum, r.dark_1d, r.dark_3d, r.mean_1d,
                            r.mean_3d});
    }
    if (f.out.empty()) {
        out << csv.str();
        return kOk;
    }
    auto file = open_output(f.out);
    auto sidecar = open_output(f.out + ".meta.json");
    file << csv.str();
    sidecar << meta.dump(2) << '\n';
    return kOk;
}

// --- mc ---------------------------------------------------------------------
struct McFlags {
    int dim = 1;
    std::optional<std::string> boundary;
    double dt = 1e-3;
    std::int64_t paths = 100000;
    std::optional<double> max_time;
};

json estimate_json(const mc::FPTEstimate& e) {
    return {{"mean", e.mean},
            {"std_err", e.std_err},
            {"n_absorbed", e.n_absorbed},
            {"n_censored", e.n_censored},
            {"censored_fraction", e.censored_fraction()},
            {"dt", e.dt_used}};
}

int cmd_mc(const CommonFlags& f, const McFlags& m, std::ostream& out, std::ostream& err) {
    const auto p = params_from(f);
    mc::Boundary boundary = m.dim == 1 ? mc::Boundary::interval : mc::Boundary::cube;
    if (m.boundary) boundary = mc::boundary_from_string(*m.boundary);
    auto cfg = mc::MCConfig::make(p, m.dim, boundary, m.dt, m.paths, f.seed);
    if (m.max_time) cfg.max_time = *m.max_time;
    cfg.validate();

    const auto est = mc::simulate_fpt_richardson(cfg, mc::RunOptions{f.threads});

    std::optional<double> analytic;
    std::string analytic_source;
    switch (boundary) {
        case mc::Boundary::interval:
            analytic = mean_fpt_1d(p);
            analytic_source = "closed form (e_m/i_s) tanh(x)";
            break;
        case mc::Boundary::cube:
            analytic = mean_fpt_3d(p).require("mean_fpt_3d");
            analytic_source = "cube double series";
            break;
        case mc::Boundary::sphere:
            if (p.i_s == 0.0) {
                analytic = p.e_m * p.e_m / (3.0 * p.sigma * p.sigma);
                analytic_source = "driftless sphere e_m^2/(3 sigma^2)";
            }
            break;
    }

    json j = {{"config",
               {{"dimension", cfg.dimension},
                {"boundary", mc::to_string(cfg.boundary)},
                {"params", params_json(p)},
                {"x", p.x().value()},
                {"dt", cfg.dt},
                {"n_paths", cfg.n_paths},
                {"seed", cfg.seed},
                {"max_time", cfg.max_time}}},
              {"coarse", estimate_json(est.coarse)},
              {"fine", estimate_json(est.fine)},
              {"extrapolated", estimate_json(est.extrapolated)}};
    if (analytic && est.extrapolated.n_absorbed >= 2) {
        j["analytic"] = {{"mean", *analytic}, {"source", analytic_source}};
        j["zscore"] = mc::zscore(*analytic, est.extrapolated);
    } else {
        j["analytic"] = nullptr;
        j["zscore"] = nullptr;
    }
    const bool reliable = est.coarse.reliable() && est.fine.reliable();
    j["reliable"] = reliable;
    out << j.dump(2) << '\n';
    if (!reliable) {
        err << "photofpt mc: more than 0.1% of paths reached max_time; raise --max-time\n";
        return kSimulationQuality;
    }
    return kOk;
}

// --- field ------------------------------------------------------------------
struct FieldFlags {
    double tau_min = 0.0;
    double tau_max = 1.0;
    int points = 101;
    std::string grid = "lin";
};

json sigma_json(const field::SigmaReport& s) {
    return {{"sigma2_time_domain", s.sigma2_time},
            {"sigma2_frequency_domain", s.sigma2_frequency},
            {"sigma2_closed_form", s.sigma2_closed_form},
            {"sigma_time_domain", s.sigma_time},
            {"sigma_frequency_domain", s.sigma_frequency},
            {"relative_difference", s.relative_difference},
            {"routes_agree", s.agree},
            {"unit", "hbar c^(3/2) a^(-7/2)"},
            {"quoted",
             {{{"value", field::SigmaReport::kQuotedOrder},
               {"label", "quoted order of magnitude"},
               {"provenance", "quoted"}},
              {{"value", field::SigmaReport::kQuotedAppendix},
               {"label", "quoted appendix value"},
               {"provenance", "quoted"}}}}};
}

int cmd_field(const CommonFlags& f, const FieldFlags& fl, std::ostream& out, std::ostream& err) {
    if (fl.tau_min < 0.0) throw UsageError("--tau-min must be >= 0");
    const auto taus = make_grid(fl.tau_min, fl.tau_max, fl.points, fl.grid, "tau");
    const auto sigma = sigma_json(field::sigma_const());

    std::vector<std::array<double, 4>> rows;
    rows.reserve(taus.size());
    for (double tau : taus) {
        rows.push_back({tau, field::correlation(tau).g, field::g_tau_small(tau), field::g_tau_large(tau)});
    }

    if (f.format == "json") {
        json doc = {{"table", json::array()}, {"sigma", sigma}};
        for (const auto& r : rows)
            doc["table"].push_back({{"tau", r[0]}, {"g_tau", r[1]}, {"g_tau_small", r[2]}, {"g_tau_large", r[3]}});
        if (f.out.empty()) {
            out << doc.dump(2) << '\n';
        } else {
            open_output(f.out) << doc.dump(2) << '\n';
        }
        return kOk;
    }

    std::ostringstream csv;
    csv << "tau,g_tau,g_tau_small,g_tau_large\n";
    for (const auto& r : rows) write_csv_row(csv, {r[0], r[1], r[2], r[3]});
    if (f.out.empty()) {
        out << csv.str();
        err << sigma.dump(2) << '\n';
        return kOk;
    }
    auto file = open_output(f.out);
    auto sidecar = open_output(f.out + ".sigma.json");
    file << csv.str();
    sidecar << sigma.dump(2) << '\n';
    return kOk;
}

// --- validate ---------------------------------------------------------------
struct ValidateFlags {
    std::vector<int> only;
    bool perturb_asymptote = false;
};

int cmd_validate(const CommonFlags& f, const ValidateFlags& v, std::ostream& out) {
    validation::SuiteOptions options;
    options.only.insert(v.only.begin(), v.only.end());
    options.workers = f.threads;
    options.seed = f.seed;
    options.perturb_asymptote = v.perturb_asymptote;
    if (f.format == "text") {
        options.on_result = [&out](const validation::CriterionResult& r) {
            out << validation::summary_line(r) << std::endl;
        };
    }
    const auto report = validation::run_acceptance(options);
    const std::string path = f.out.empty() ? "validation_report" : f.out;
    open_output(path + ".json") << report.to_json().dump(2) << '\n';
    {
        auto text = open_output(path + ".txt");
        report.write_text(text);
    }
    if (f.format == "json") out << report.to_json().dump(2) << '\n';
    return report.all_passed() ? kOk : kValidationFailure;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"photofpt: first-passage detection rates for a threshold accumulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", PHOTOFPT_VERSION);

    CommonFlags common;
    SweepFlags sweep;
    McFlags mcf;
    FieldFlags fieldf;
    ValidateFlags valf;

    auto* rate = app.add_subcommand("rate", "analytic rates and mean first-passage times (JSON)");
    add_physics_flags(rate, common, true);
    rate->add_option("--eta", common.eta, "quantum efficiency of the reference detector")->check(CLI::Range(0.0, 1.0));
    add_seed_flag(rate, common);

    auto* sw = app.add_subcommand("sweep", "rate curve over an intensity grid");
    add_physics_flags(sw, common, false);
    sw->add_option("--eta", common.eta, "quantum efficiency of the reference detector")->check(CLI::Range(0.0, 1.0));
    sw->add_option("--x-min", sweep.x_min, "smallest x = i_s e_m / sigma^2")->capture_default_str();
    sw->add_option("--x-max", sweep.x_max, "largest x")->capture_default_str();
    sw->add_option("--points", sweep.points, "grid points")->capture_default_str();
    sw->add_option("--grid", sweep.grid, "grid spacing")->check(CLI::IsMember({"log", "lin"}))->capture_default_str();
    sw->add_option("--out", common.out, "output path (CSV plus <out>.meta.json); stdout if omitted");
    sw->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_seed_flag(sw, common);

    auto* mcc = app.add_subcommand("mc", "Monte Carlo mean first-passage time with Richardson extrapolation");
    add_physics_flags(mcc, common, true);
    mcc->add_option("--dim", mcf.dim, "dimension")->check(CLI::IsMember({1, 3}))->capture_default_str();
    mcc->add_option("--boundary", mcf.boundary, "interval, cube or sphere")
        ->check(CLI::IsMember({"interval", "cube", "sphere"}));
    mcc->add_option("--dt", mcf.dt, "coarse time step")->capture_default_str();
    mcc->add_option("--paths", mcf.paths, "number of paths")->capture_default_str();
    mcc->add_option("--max-time", mcf.max_time, "censoring time (default 100 e_m^2/sigma^2)");
    mcc->add_option("--threads", common.threads, "worker threads, 0 = all cores");
    add_seed_flag(mcc, common);

    auto* fld = app.add_subcommand("field", "zero-point field correlation table and sigma report");
    fld->add_option("--tau-min", fieldf.tau_min, "smallest tau (units a/c)")->capture_default_str();
    fld->add_option("--tau-max", fieldf.tau_max, "largest tau")->capture_default_str();
    fld->add_option("--points", fieldf.points, "grid points")->capture_default_str();
    fld->add_option("--grid", fieldf.grid, "grid spacing")->check(CLI::IsMember({"log", "lin"}))->capture_default_str();
    fld->add_option("--out", common.out, "CSV path (sigma report in <out>.sigma.json); stdout/stderr if omitted");
    fld->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_seed_flag(fld, common);

    auto* val = app.add_subcommand("validate", "run the acceptance criteria");
    val->add_option("--only", valf.only, "criterion numbers")->check(CLI::Range(1, validation::kCriterionCount));
    val->add_option("--out", common.out, "report path stem (writes <stem>.json and <stem>.txt)");
    val->add_option("--format", common.format, "stdout format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    val->add_flag("--perturb-asymptote", valf.perturb_asymptote,
                  "fault injection: scale the large-x asymptote constant by 1.02");
    val->add_option("--threads", common.threads, "worker threads, 0 = all cores");
    add_seed_flag(val, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << PHOTOFPT_VERSION << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "photofpt: " << e.what() << '\n';
        return kUsage;
    }

    // Per-command default format.
    const bool format_given = (sw->parsed() && sw->count("--format")) || (fld->parsed() && fld->count("--format")) ||
                              (val->parsed() && val->count("--format"));
    if (!format_given) common.format = val->parsed() ? "text" : "csv";

    try {
        if (rate->parsed()) return cmd_rate(common, out);
        if (sw->parsed()) return cmd_sweep(common, sweep, out);
        if (mcc->parsed()) return cmd_mc(common, mcf, out, err);
        if (fld->parsed()) return cmd_field(common, fieldf, out, err);
        if (val->parsed()) return cmd_validate(common, valf, out);
    } catch (const UsageError& e) {
        err << "photofpt: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidParameter& e) {
        err << "photofpt: invalid parameter: " << e.what() << '\n';
        return kUsage;
    } catch (const TruncationError& e) {
        err << "photofpt: series did not converge: " << e.what() << '\n';
        return kSimulationQuality;
    }
    return kUsage;
}

}  // namespace photofpt::cli
