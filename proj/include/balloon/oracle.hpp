#pragma once

#include <optional>

#include "balloon/metrics.hpp"

namespace balloon {

// Which measure is being optimized. RE maximizes the minimum angle, RA
// minimizes max/min, DE minimizes the standard deviation, SOP minimizes the
// sum of adjacent sub-wedge products.
enum class Problem { RE, RA, DE, SOP };

const char* to_string(Problem p);
std::optional<Problem> problem_from_string(std::string_view s);

struct OracleBudget {
    int max_children = 7;
    long long max_states = 10'000'000;
};

struct OracleResult {
    Solution solution;
    double optimum = 0.0;  // the optimal value of the requested measure
};

// Exhaustive search over the case's full (sigma, t) space, canonicalized by
// rotation always and by reflection only where the metrics are reflection
// invariant (C1, C4). Deterministic tie-break: lexicographically smallest
// (sigma, t). Throws BudgetExceededError instead of truncating.
OracleResult brute_force(const StarInstance& star, Problem problem,
                         const OracleBudget& budget = {});

// Number of (sigma, t) states brute_force would visit.
long long oracle_state_count(const StarInstance& star);

struct DecisionResult {
    bool yes = false;
    std::optional<Solution> witness;
};

// Does some (sigma, t) of the instance's case keep every angle in [lo, hi]?
DecisionResult decide_angle_range(const StarInstance& star, double lo,
                                  double hi, const OracleBudget& budget = {});

// Does some (sigma, t) achieve SOP <= ub?
DecisionResult decide_sop_at_most(const StarInstance& star, double ub,
                                  const OracleBudget& budget = {});

}  // namespace balloon
