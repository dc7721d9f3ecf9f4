#include "balloon/driver.hpp"

#include <chrono>

namespace balloon {

const char* to_string(SolverChoice c) {
    switch (c) {
        case SolverChoice::Auto: return "auto";
        case SolverChoice::Exact: return "exact";
        case SolverChoice::Approx: return "approx";
        case SolverChoice::Oracle: return "oracle";
    }
    return "?";
}

std::optional<SolverChoice> solver_from_string(std::string_view s) {
    if (s == "auto") return SolverChoice::Auto;
    if (s == "exact") return SolverChoice::Exact;
    if (s == "approx") return SolverChoice::Approx;
    if (s == "oracle") return SolverChoice::Oracle;
    return std::nullopt;
}

namespace {

struct Cell {
    bool polynomial;
    const char* complexity;
};

// Exact-solvability of each (case, problem) cell and its cost.
Cell cell_info(CaseTag c, Problem p) {
    switch (c) {
        case CaseTag::C1:
            if (p == Problem::RA) return {false, "served by oracle/2-approx"};
            return {true, "O(n log n)"};
        case CaseTag::C2:
            return {true, p == Problem::RA ? "O(n^2)" : "O(n)"};
        case CaseTag::C3:
        case CaseTag::C4:
            if (p == Problem::RE) return {true, "O(n log n)"};
            return {false, "NP-complete"};
    }
    return {false, ""};
}

bool within_budget(const StarInstance& star, const OracleBudget& budget) {
    return star.n() <= budget.max_children &&
           oracle_state_count(star) <= budget.max_states;
}

Solution run_exact(const StarInstance& star, Problem problem) {
    switch (star.case_tag) {
        case CaseTag::C1:
            if (problem == Problem::RE) return solve_re3_re4(star);
            return solve_de1(star);  // DE and SOP share the optimizer
        case CaseTag::C2:
            if (problem == Problem::RE) return solve_re2(star);
            if (problem == Problem::RA) return solve_ra2(star);
            return solve_de2(star);
        case CaseTag::C3:
        case CaseTag::C4:
            return solve_re3_re4(star);  // only RE is polynomial here
    }
    throw InvalidArgumentError("unknown case");
}

}  // namespace

SolveOutcome solve_star(const StarInstance& star, Problem problem,
                        SolverChoice choice, const OracleBudget& budget) {
    validate_star(star);
    const auto t0 = std::chrono::steady_clock::now();

    SolveOutcome out;
    const Cell cell = cell_info(star.case_tag, problem);
    out.info.polynomial = cell.polynomial;
    out.info.complexity = cell.complexity;

    auto finish = [&](Solution sol, bool exact,
                      std::optional<ApproxCertificate> cert = {}) {
        out.solution = std::move(sol);
        out.info.exact_used = exact;
        out.certificate = cert;
        out.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return out;
    };

    auto run_approx = [&]() {
        ApproxResult r = problem == Problem::RA || problem == Problem::RE
                             ? approx_ra(star)
                             : (problem == Problem::SOP ? approx_sop(star)
                                                        : approx_de(star));
        return finish(std::move(r.solution), false, r.cert);
    };

    switch (choice) {
        case SolverChoice::Oracle: {
            OracleResult r = brute_force(star, problem, budget);
            return finish(std::move(r.solution), true);
        }
        case SolverChoice::Exact: {
            if (cell.polynomial) return finish(run_exact(star, problem), true);
            if (within_budget(star, budget)) {
                OracleResult r = brute_force(star, problem, budget);
                return finish(std::move(r.solution), true);
            }
            throw SolverRefusalError(
                std::string(to_string(problem)) + " on case " +
                to_string(star.case_tag) +
                " is NP-complete (see the dispatch table in the README); "
                "exact answers need the exhaustive solver, which allows at "
                "most " +
                std::to_string(budget.max_children) + " children (got " +
                std::to_string(star.n()) + ")");
        }
        case SolverChoice::Approx:
            if (cell.polynomial && problem == Problem::RE)
                return finish(run_exact(star, problem), true);
            if (star.case_tag == CaseTag::C2 || star.case_tag == CaseTag::C1) {
                // no dedicated approximations for these; exact is cheap,
                // except C1 aspect ratio which has the 2-approximation
                if (star.case_tag == CaseTag::C1 && problem == Problem::RA)
                    return run_approx();
                return finish(run_exact(star, problem), true);
            }
            return run_approx();
        case SolverChoice::Auto:
            if (cell.polynomial) return finish(run_exact(star, problem), true);
            if (within_budget(star, budget)) {
                OracleResult r = brute_force(star, problem, budget);
                return finish(std::move(r.solution), true);
            }
            return run_approx();
    }
    throw InvalidArgumentError("unknown solver choice");
}

TreeOptimizeResult optimize_tree(const RootedTree& tree,
                                 const OptimizeOptions& options) {
    validate_tree(tree);
    TreeOptimizeResult result;
    result.layout = sns_layout(tree, options.sns);

    std::map<int, Solution> solutions;
    for (int v : tree.post_order()) {
        if (tree.is_leaf(v)) continue;
        StarInstance star = *result.layout.stars[v];
        if (options.case_tag != CaseTag::C1) {
            // drop the free arcs, then rescale to a full circle so the
            // realized drawing closes (scaling preserves the optima)
            const auto minima = tight_sub_wedges(tree, result.layout, v);
            star = normalize(shrink_to_uneven(star, minima));
        }
        star.case_tag = options.case_tag;

        NodeOutcome node;
        node.node = v;
        node.instance = star;
        node.outcome =
            solve_star(star, options.problem, options.solver, options.budget);
        solutions[v] = node.outcome.solution;
        result.layout.stars[v] = star;
        result.per_node.push_back(std::move(node));
    }
    result.layout = realize(tree, std::move(result.layout), solutions);
    return result;
}

}  // namespace balloon
