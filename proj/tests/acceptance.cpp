// Acceptance runner: one PASS/FAIL line per criterion, details below it.
//
//   acceptance                 all criteria
//   acceptance --only 4 --only 7
//   acceptance --json report.json

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "suite.hpp"

int main(int argc, char** argv) {
    CLI::App app{"photofpt acceptance criteria"};
    std::vector<int> only;
    unsigned workers = 0;
    std::string json_path;
    bool perturb = false;
    app.add_option("--only", only, "criterion numbers to run")->check(CLI::Range(1, 13));
    app.add_option("--workers", workers, "Monte Carlo worker threads (0 = all cores)");
    app.add_option("--json", json_path, "write the full report as JSON");
    app.add_flag("--perturb-asymptote", perturb, "scale the AC04 constant by 1.02");
    CLI11_PARSE(app, argc, argv);

    photofpt::validation::SuiteOptions options;
    options.only.insert(only.begin(), only.end());
    options.workers = workers;
    options.perturb_asymptote = perturb;
    options.on_result = [](const photofpt::validation::CriterionResult& r) {
        std::cout << photofpt::validation::summary_line(r) << std::endl;
        for (const auto& note : r.notes) std::cout << "     - " << note << '\n';
    };

    const auto report = photofpt::validation::run_acceptance(options);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.to_json().dump(2) << '\n';
    }
    std::size_t passed = 0;
    for (const auto& c : report.criteria) passed += c.passed ? 1 : 0;
    std::cout << passed << "/" << report.criteria.size() << " criteria passed" << std::endl;
    return report.all_passed() ? 0 : 1;
}
