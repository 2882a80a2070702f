#pragma once

#include <string>
#include <vector>

namespace ntlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool informational = false;  // recorded outcomes without a pass/fail stake
    std::string details;
    double seconds = 0;
};

/// Run one criterion (1..10) or all of them (0). Each criterion pins its own
/// parameters and tolerances.
std::vector<CriterionResult> run_acceptance(int only_id = 0);

/// Render one line per criterion: "[PASS] 3 stern-identities (12.3s) ...".
std::string format_results(const std::vector<CriterionResult>& results);

/// True when every non-informational criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ntlab
