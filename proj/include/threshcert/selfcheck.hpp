#pragma once

// Desk-scale property suites for every module, shared by the CLI and tests.

#include <functional>
#include <string>
#include <vector>

namespace threshcert {

struct SelfcheckOptions {
    /// Run the numeric and brute-force suites.
    bool oracle = true;
    /// Mutation check: perturbs one Psi_e coefficient inside the psi suite,
    /// which must then fail.
    bool tamper_psi = false;
    int jobs = 1;
};

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Runs all suites in a fixed order; `on_suite` (if set) is called after each.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opt,
                                       const std::function<void(const SuiteResult&)>& on_suite = {});

}  // namespace threshcert
