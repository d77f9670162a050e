#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "photofpt/analytic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using photofpt::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / ("photofpt_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("format_double round-trips") {
    using photofpt::cli::format_double;
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(INFINITY) == "inf");
    for (double v : {std::numbers::pi, 1.0 / 3.0, 6.02214076e23, 4.9e-324, 0.48201379003790845}) {
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("rate command") {
    SUBCASE("zero intensity") {
        const auto r = invoke({"rate", "--em", "1", "--sigma", "1", "--is", "0"});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j["rate_1d"].get<double>() == 1.0);
        CHECK(j["rate_3d"].get<double>() == doctest::Approx(photofpt::rate_3d(photofpt::DetectorParams{}).value));
        CHECK(j["x"].get<double>() == 0.0);
        CHECK(j["dark_fraction_1d"].is_null());
        CHECK(j.contains("mean_fpt_1d"));
        CHECK(j.contains("mean_fpt_3d"));
    }
    SUBCASE("unit intensity") {
        const auto r = invoke({"rate", "--em", "1", "--sigma", "1", "--is", "1"});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j["rate_1d"].get<double>() == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-15));
        CHECK(j["dark_fraction_1d"].get<double>() == doctest::Approx(1.0 / std::tanh(1.0) - 1.0).epsilon(1e-13));
    }
    SUBCASE("usage errors exit 2") {
        CHECK(invoke({"rate"}).code == 2);
        CHECK(invoke({"rate", "--em", "1"}).code == 2);
        CHECK(invoke({"rate", "--is", "-1"}).code == 2);
        CHECK(invoke({"rate", "--is", "abc"}).code == 2);
        CHECK(invoke({"rate", "--is", "1", "--em", "0"}).code == 2);
        CHECK(invoke({"rate", "--is", "1", "--bogus"}).code == 2);
        CHECK(invoke({}).code == 2);
        const auto r = invoke({"rate"});
        CHECK_FALSE(r.err.empty());
    }
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("sweep command") {
    const auto dir = scratch_dir();
    const auto a = (dir / "a.csv").string();
    const auto b = (dir / "b.csv").string();

    REQUIRE(invoke({"sweep", "--x-min", "0.01", "--x-max", "100", "--points", "50", "--grid", "log", "--out", a})
                .code == 0);
    REQUIRE(invoke({"sweep", "--x-min", "0.01", "--x-max", "100", "--points", "50", "--grid", "log", "--out", b})
                .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(fs::exists(a + ".meta.json"));
    const auto meta = json::parse(slurp(a + ".meta.json"));
    CHECK(meta.contains("timestamp"));
    CHECK(meta.contains("version"));
    CHECK(meta["params"]["e_m"].get<double>() == 1.0);

    std::string header;
    const auto rows = parse_csv(slurp(a), &header);
    CHECK(header == "i_s,x,rate_1d,rate_3d,rate_quantum,dark_fraction_1d,dark_fraction_3d,mean_fpt_1d,mean_fpt_3d");
    REQUIRE(rows.size() == 50);
    CHECK(rows.front()[1] == 0.01);
    CHECK(rows.back()[1] == 100.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        CHECK(r[2] * r[7] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r[3] * r[8] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r[2] >= 0.0);
        CHECK(r[3] >= r[2] * (1.0 - 1e-10));
        if (i > 0) {
            CHECK(r[0] > rows[i - 1][0]);
            CHECK(r[2] >= rows[i - 1][2]);
            CHECK(r[3] >= rows[i - 1][3]);
            CHECK(r[4] >= rows[i - 1][4]);
            CHECK(r[5] <= rows[i - 1][5]);
        }
    }

    SUBCASE("single point equals the rate command") {
        const auto s = invoke({"sweep", "--x-min", "2", "--x-max", "2", "--points", "1"});
        REQUIRE(s.code == 0);
        const auto one = parse_csv(s.out);
        REQUIRE(one.size() == 1);
        const auto rate = json::parse(invoke({"rate", "--is", "2"}).out);
        CHECK(one[0][2] == rate["rate_1d"].get<double>());
        CHECK(one[0][3] == rate["rate_3d"].get<double>());
        CHECK(one[0][5] == rate["dark_fraction_1d"].get<double>());
    }
    SUBCASE("json format") {
        const auto s = invoke({"sweep", "--points", "3", "--format", "json"});
        REQUIRE(s.code == 0);
        const auto j = json::parse(s.out);
        CHECK(j["rows"].size() == 3);
        CHECK(j.contains("metadata"));
    }
    SUBCASE("errors") {
        CHECK(invoke({"sweep", "--out", (dir / "missing" / "x.csv").string()}).code == 2);
        CHECK(invoke({"sweep", "--x-min", "0", "--grid", "log"}).code == 2);
        CHECK(invoke({"sweep", "--x-min", "5", "--x-max", "1"}).code == 2);
        CHECK(invoke({"sweep", "--grid", "cubic"}).code == 2);
        CHECK(invoke({"sweep", "--points", "0"}).code == 2);
    }
    fs::remove_all(dir);
}

TEST_CASE("field command") {
    const auto r = invoke({"field", "--tau-min", "0", "--tau-max", "1", "--points", "101"});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    CHECK(header == "tau,g_tau,g_tau_small,g_tau_large");
    REQUIRE(rows.size() == 101);
    CHECK(rows[0][1] == doctest::Approx(1.0 / (18.0 * std::numbers::pi)).epsilon(1e-12));
    for (const auto& row : rows) {
        if (row[0] <= 0.05) CHECK(std::abs(row[2] - row[1]) <= 1e-3 * std::abs(row[1]));
    }

    const auto sigma = json::parse(r.err);
    CHECK(sigma.contains("sigma2_time_domain"));
    CHECK(sigma.contains("sigma2_frequency_domain"));
    CHECK(sigma["routes_agree"].get<bool>());
    REQUIRE(sigma["quoted"].size() == 2);
    CHECK(sigma["quoted"][0]["value"].get<double>() == 1e-3);
    CHECK(sigma["quoted"][1]["value"].get<double>() == 2.12e-4);
    CHECK(sigma["quoted"][1]["provenance"] == "quoted");

    SUBCASE("sidecar and json") {
        const auto dir = scratch_dir();
        const auto out = (dir / "g.csv").string();
        CHECK(invoke({"field", "--points", "5", "--out", out}).code == 0);
        CHECK(fs::exists(out + ".sigma.json"));
        const auto j = json::parse(invoke({"field", "--points", "5", "--format", "json"}).out);
        CHECK(j["table"].size() == 5);
        CHECK(j.contains("sigma"));
        fs::remove_all(dir);
    }
    SUBCASE("bad grids") {
        CHECK(invoke({"field", "--tau-min", "-1"}).code == 2);
        CHECK(invoke({"field", "--tau-min", "0", "--grid", "log"}).code == 2);
        CHECK(invoke({"field", "--tau-min", "2", "--tau-max", "1"}).code == 2);
        CHECK(invoke({"field", "--points", "0"}).code == 2);
    }
}

TEST_CASE("mc command") {
    const auto r = invoke({"mc", "--dim", "1", "--boundary", "interval", "--is", "2", "--paths", "100000"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(std::abs(j["zscore"].get<double>()) <= 3.0);
    CHECK(j["analytic"]["mean"].get<double>() == doctest::Approx(0.5 * std::tanh(2.0)).epsilon(1e-15));
    CHECK(j["reliable"].get<bool>());
    CHECK(j["config"]["seed"].get<std::uint64_t>() == 20071010ULL);
    CHECK(j["extrapolated"]["n_censored"].get<int>() == 0);

    const auto again = invoke({"mc", "--is", "2", "--paths", "1000", "--seed", "5"});
    CHECK(again.out == invoke({"mc", "--is", "2", "--paths", "1000", "--seed", "5", "--threads", "2"}).out);

    CHECK(invoke({"mc", "--is", "0", "--dt", "0.1"}).code == 2);
    CHECK(invoke({"mc", "--is", "0", "--paths", "10"}).code == 2);
    CHECK(invoke({"mc", "--is", "0", "--dim", "3", "--boundary", "interval"}).code == 2);
    CHECK(invoke({"mc", "--is", "0", "--max-time", "5"}).code == 2);
    CHECK(invoke({"mc", "--is", "0", "--dim", "2"}).code == 2);
}

TEST_CASE("validate command") {
    const auto dir = scratch_dir();
    const auto stem = (dir / "report").string();
    const auto ok = invoke({"validate", "--only", "4", "--only", "6", "--out", stem});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS AC04") != std::string::npos);
    const auto report = json::parse(slurp(stem + ".json"));
    REQUIRE(report["criteria"].size() == 2);
    CHECK(report["criteria"][0]["id"] == "AC04");
    CHECK(report["criteria"][1]["id"] == "AC06");
    CHECK(fs::exists(stem + ".txt"));

    const auto fault = invoke({"validate", "--only", "4", "--perturb-asymptote", "--out", stem});
    CHECK(fault.code == 1);
    CHECK(fault.out.find("FAIL AC04") != std::string::npos);

    const auto j = invoke({"validate", "--only", "10", "--format", "json", "--out", stem});
    CHECK(j.code == 0);
    CHECK(json::parse(j.out)["all_passed"].get<bool>());

    CHECK(invoke({"validate", "--only", "14"}).code == 2);
    CHECK(invoke({"validate", "--out", (dir / "no" / "r").string(), "--only", "6"}).code == 2);
    fs::remove_all(dir);
}
