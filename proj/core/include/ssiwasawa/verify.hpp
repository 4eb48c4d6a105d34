#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssiw {

struct VerifyOptions {
    int p = 3;
    /// Relative precision N of the base context.
    int precision = 8;
    /// Truncation degree of the Lubin-Tate law checks.
    int degree = 32;
    /// Seed for the randomized evaluation-law and finiteness checks.
    std::uint64_t seed = 1;
    /// Digits demanded of the trace relations.
    int relation_digits = 3;
    /// Random samples for the evaluation law.
    int samples = 50;
};

struct VerifyItem {
    std::string name;
    bool passed = false;
    /// Achieved precision or the counts behind the verdict.
    std::string detail;
    /// Reported for information only; never fails the run.
    bool informational = false;
    /// Not run because it needs a tower beyond the ring-degree cap.
    bool skipped = false;
};

/// Runs every check of the library in a fixed order; deterministic given the
/// options. A check that throws is a failure with the message, except one
/// stopped by the ring-degree cap, which is a SKIP.
std::vector<VerifyItem> run_verification(const VerifyOptions& options);

/// "PASS  name  (detail)" per item; INFO and SKIP mark the two exemptions.
std::string format_report(const std::vector<VerifyItem>& items);

[[nodiscard]] bool all_passed(const std::vector<VerifyItem>& items);

} // namespace ssiw
