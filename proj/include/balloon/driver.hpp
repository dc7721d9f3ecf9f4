#pragma once

#include <map>

#include "balloon/approx.hpp"
#include "balloon/exact.hpp"
#include "balloon/layout.hpp"
#include "balloon/oracle.hpp"
#include "balloon/tree.hpp"

namespace balloon {

enum class SolverChoice { Auto, Exact, Approx, Oracle };

const char* to_string(SolverChoice c);
std::optional<SolverChoice> solver_from_string(std::string_view s);

// How one (case, problem) cell is served and at what cost.
struct DispatchInfo {
    bool polynomial = false;       // an exact polynomial algorithm exists
    const char* complexity = "";   // of the exact algorithm, or "NP-complete"
    bool exact_used = false;       // the produced solution is optimal
};

struct SolveOutcome {
    Solution solution;
    DispatchInfo info;
    std::optional<ApproxCertificate> certificate;
    double wall_ms = 0.0;
};

// Routes a star instance to a solver. Auto picks the exact polynomial
// algorithm where one exists (C1: RE/DE/SOP; C2: all; C3/C4: RE) and the
// matching approximation otherwise; NP-complete cells fall back to the
// exhaustive oracle only within budget. Requesting Exact on an NP-complete
// cell beyond the oracle budget raises SolverRefusalError.
SolveOutcome solve_star(const StarInstance& star, Problem problem,
                        SolverChoice choice, const OracleBudget& budget = {});

struct OptimizeOptions {
    Problem problem = Problem::RE;
    CaseTag case_tag = CaseTag::C1;
    SolverChoice solver = SolverChoice::Auto;
    OracleBudget budget;
    SnsParams sns;
};

struct NodeOutcome {
    int node = -1;
    StarInstance instance;
    SolveOutcome outcome;
};

struct TreeOptimizeResult {
    std::vector<NodeOutcome> per_node;  // internal nodes in post-order
    TreeLayout layout;                  // realized with the chosen solutions
};

// Bottom-up pass: lays the tree out, builds each internal node's star
// instance (even from the SNS pass for C1; shrunk to the tight uneven
// sub-wedges for C2/C3/C4), solves it, and realizes the drawing with the
// chosen orders and flips.
TreeOptimizeResult optimize_tree(const RootedTree& tree,
                                 const OptimizeOptions& options);

}  // namespace balloon
