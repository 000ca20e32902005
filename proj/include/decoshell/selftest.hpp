#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace decoshell {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;

    bool passed() const;
    /// Name of the first failing check, empty when all pass.
    std::string first_failure() const;
};

struct SelftestOptions {
    unsigned long long seed = 20260415ULL;
    /// Relative error injected into the analytic shell slope; nonzero values
    /// emulate a broken Jacobian so the harness can confirm detection.
    double jacobian_perturbation = 0.0;
};

/// Fast invariant suite: pole_residuals, threshold_exactness, jacobian_check,
/// decoupling_limit. Writes one line per check to `log`.
SelftestReport run_selftest(std::ostream& log, const SelftestOptions& opt = {});

}  // namespace decoshell
