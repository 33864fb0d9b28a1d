#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// The verification suite shared by `qfp verify` and the acceptance test binary.

namespace qfp::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string target;
    std::string actual;
    std::string tolerance;
    double seconds = 0.0;
    /// Zero when the criterion has no runtime bound.
    double time_limit = 0.0;
};

using PolylogFunction = std::function<double(double s, double z)>;

struct Options {
    /// Skips the long simulation (criterion 9).
    bool quick = false;
    /// Evaluator used by the special-function criteria; replaceable so a
    /// broken implementation can be shown to fail the suite.
    PolylogFunction polylog;
    std::uint64_t seed = 20240617;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion: status, id, name, actual vs target, tolerance, time.
std::string format_line(const CriterionResult& r);
void print_report(std::ostream& out, const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace qfp::acceptance
