#include <doctest.h>

#include <set>
#include <sstream>

#include "suite.hpp"

using namespace photofpt::validation;

TEST_CASE("acceptance report structure") {
    SuiteOptions options;
    options.only = {3, 4, 5, 6, 10};
    std::vector<std::string> seen;
    options.on_result = [&seen](const CriterionResult& r) { seen.push_back(r.id); };
    const auto report = run_acceptance(options);

    REQUIRE(report.criteria.size() == 5);
    CHECK(seen == std::vector<std::string>{"AC03", "AC04", "AC05", "AC06", "AC10"});
    for (const auto& c : report.criteria) {
        CHECK_FALSE(c.title.empty());
        CHECK_FALSE(c.expected.empty());
        CHECK_FALSE(c.observed.empty());
        CHECK_FALSE(c.tolerance.empty());
        CHECK(std::set<std::string>{"quoted", "closed-form", "oracle", "internal-consistency", "monte-carlo"}.count(
                  c.source) == 1);
    }
    const auto j = report.to_json();
    CHECK(j["criteria"].size() == 5);
    CHECK(j["all_passed"].get<bool>() == report.all_passed());

    std::ostringstream text;
    report.write_text(text);
    CHECK(text.str().find("criteria passed") != std::string::npos);
    CHECK(summary_line(report.criteria[1]).rfind("PASS AC04", 0) == 0);
}

TEST_CASE("asymptote fault injection is detected") {
    SuiteOptions options;
    options.only = {4};
    options.perturb_asymptote = true;
    const auto report = run_acceptance(options);
    CHECK_FALSE(report.all_passed());
}
