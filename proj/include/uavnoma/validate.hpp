#pragma once

// Cross-check suite behind `uavnoma validate`: closed forms against the
// general evaluators, series against quadrature, analytic against seeded MC.

#include <string>
#include <vector>

namespace uavnoma {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// quick: small MC budgets (a few seconds). Otherwise 10^6-trial pinned
/// comparisons and marginal checks at 10^5 trials.
std::vector<CheckResult> run_validation(bool quick, unsigned threads = 0);

}  // namespace uavnoma
