#pragma once

#include <optional>
#include <string>
#include <vector>

namespace trojan {

/// One verification check: `measured` is the observed error or violation
/// (nonnegative by construction), compared against `threshold`.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    /// When set, replaces every check's threshold.
    std::optional<double> tolerance;
};

/// Runs every numerical oracle and module invariant.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace trojan
