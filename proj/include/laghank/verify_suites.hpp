#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laghank/alpha.hpp"

namespace laghank {

/// One verified identity: residual against its tolerance. Checks flagged
/// report_only contribute numbers but never fail a suite (used where the
/// toolkit measures rather than asserts).
struct IdentityCheck {
    std::string id;
    std::string description;
    double residual = 0.0;
    double tolerance = 0.0;
    bool report_only = false;
    bool passed = true;
};

struct SuiteReport {
    std::string suite;
    double alpha = 0.0;
    int k_max = 0;
    unsigned seed = 0;
    std::vector<IdentityCheck> checks;
    bool all_passed = true;

    std::string to_json(bool with_timestamp = true) const;
};

struct SuiteOptions {
    double alpha = 0.5;
    int k_max = 24;
    unsigned seed = 20240901;
};

/// Run one of the named identity suites: special, laguerre, sequences,
/// bessel, bridges, or all (concatenation).
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Valid suite names, for CLI validation.
const std::vector<std::string>& suite_names();

} // namespace laghank
