#pragma once

// The acceptance suite: thirteen numbered checks, each recording the expected
// value and where it comes from, what was observed, the tolerance, and the
// verdict.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace photofpt::validation {

struct CriterionResult {
    int number = 0;
    std::string id;          ///< "AC01" .. "AC13"
    std::string title;
    std::string expected;
    std::string source;      ///< quoted | closed-form | oracle | internal-consistency | monte-carlo
    std::string observed;
    std::string tolerance;
    bool passed = false;
    std::vector<std::string> notes;
    nlohmann::json data = nlohmann::json::object();
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    nlohmann::json to_json() const;
    void write_text(std::ostream& out) const;
};

struct SuiteOptions {
    std::set<int> only;            ///< empty: run all thirteen
    unsigned workers = 0;          ///< Monte Carlo workers, 0 = hardware concurrency
    std::uint64_t seed = 20071010ULL;  ///< Monte Carlo seed (mc::kDefaultSeed)
    bool perturb_asymptote = false;  ///< mutation check: scales pi^4/128 by 1.02 in AC04
    std::function<void(const CriterionResult&)> on_result;  ///< progress callback
};

inline constexpr int kCriterionCount = 13;

ValidationReport run_acceptance(const SuiteOptions& options = {});

/// Human-readable one-line verdict, "PASS AC04 ..." / "FAIL AC03 ...".
std::string summary_line(const CriterionResult& r);

}  // namespace photofpt::validation
