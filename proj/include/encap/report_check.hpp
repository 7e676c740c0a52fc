#pragma once

#include <string>
#include <vector>

#include "encap/complement.hpp"
#include "encap/constructions.hpp"

namespace encap {

/// Outcome of checking a ConstructionReport against the exact engine.
struct ReportCheck {
    bool pass = true;
    std::vector<std::string> failures;
    bool disjoint = false;
    std::size_t encapsulated = 0;
    bool complement_finite = false;  // every S-cell is a point and S has no interior
    std::vector<std::size_t> nu;     // filled when the report states expected_nu
};

struct ReportCheckOptions {
    std::size_t budget = kDefaultAnalysisBudget;
    std::size_t convexity_trials = 60;
    std::uint64_t seed = 1;
};

ReportCheck check_report(const ConstructionReport& report, const ReportCheckOptions& opt = {});

}  // namespace encap
