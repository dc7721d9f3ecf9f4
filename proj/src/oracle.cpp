#include "balloon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace balloon {

const char* to_string(Problem p) {
    switch (p) {
        case Problem::RE: return "RE";
        case Problem::RA: return "RA";
        case Problem::DE: return "DE";
        case Problem::SOP: return "SOP";
    }
    return "?";
}

std::optional<Problem> problem_from_string(std::string_view s) {
    if (s == "re" || s == "RE") return Problem::RE;
    if (s == "ra" || s == "RA") return Problem::RA;
    if (s == "de" || s == "DE") return Problem::DE;
    if (s == "sop" || s == "SOP") return Problem::SOP;
    return std::nullopt;
}

namespace {

// saturating: 21! overflows, and any such count is over every sane budget
long long factorial(int k) {
    if (k > 20) return std::numeric_limits<long long>::max();
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Score such that smaller is better for every problem; RE is negated.
double score(Problem problem, const MetricsReport& m) {
    switch (problem) {
        case Problem::RE: return -m.ang_resl;
        case Problem::RA: return m.asp_ratio;  // +inf when min angle is 0
        case Problem::DE: return m.std_dev;
        case Problem::SOP: return m.sop;
    }
    return 0.0;
}

struct Enumerator {
    const StarInstance& star;
    int n;
    bool enumerate_sigma;
    bool halve_by_reflection;
    bool enumerate_t;

    explicit Enumerator(const StarInstance& s)
        : star(s), n(s.n()),
          enumerate_sigma(s.case_tag != CaseTag::C2),
          halve_by_reflection(s.case_tag == CaseTag::C1 ||
                              s.case_tag == CaseTag::C4),
          enumerate_t(s.case_tag == CaseTag::C2 ||
                      s.case_tag == CaseTag::C4) {}

    long long state_count() const {
        long long orderings = 1;
        if (enumerate_sigma && n >= 3) {
            orderings = factorial(n - 1);
            if (halve_by_reflection) orderings /= 2;
        }
        long long flips = enumerate_t ? (1LL << n) : 1;
        return orderings * flips;
    }

    // Calls fn(sigma, t) for every state. sigma always starts at child 0.
    void for_each(const std::function<void(const CircularOrdering&,
                                           const FlipAssignment&)>& fn) const {
        CircularOrdering sigma = CircularOrdering::identity(n);
        FlipAssignment t = FlipAssignment::zeros(n);

        auto run_t = [&]() {
            if (!enumerate_t) {
                fn(sigma, t);
                return;
            }
            for (long long mask = 0; mask < (1LL << n); ++mask) {
                for (int c = 0; c < n; ++c)
                    t.bits[c] = static_cast<std::uint8_t>((mask >> c) & 1);
                fn(sigma, t);
            }
        };

        if (!enumerate_sigma || n <= 2) {
            run_t();
            return;
        }
        // sigma[0] = 0 kills rotations; sigma[1] < sigma[n-1] kills
        // reflections where those are metric-preserving.
        std::vector<int> rest(n - 1);
        for (int i = 0; i < n - 1; ++i) rest[i] = i + 1;
        do {
            if (halve_by_reflection && rest.front() > rest.back()) continue;
            std::copy(rest.begin(), rest.end(), sigma.order.begin() + 1);
            run_t();
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
};

void check_budget(const StarInstance& star, const OracleBudget& budget) {
    validate_star(star);
    if (star.n() > budget.max_children)
        throw BudgetExceededError(
            "instance has " + std::to_string(star.n()) +
            " children; oracle budget allows at most " +
            std::to_string(budget.max_children));
    const long long states = Enumerator(star).state_count();
    if (states > budget.max_states)
        throw BudgetExceededError(
            "enumeration needs " + std::to_string(states) +
            " states; oracle budget allows at most " +
            std::to_string(budget.max_states));
}

}  // namespace

long long oracle_state_count(const StarInstance& star) {
    return Enumerator(star).state_count();
}

OracleResult brute_force(const StarInstance& star, Problem problem,
                         const OracleBudget& budget) {
    check_budget(star, budget);

    bool have = false;
    double best = 0.0;
    CircularOrdering best_sigma;
    FlipAssignment best_t;

    Enumerator(star).for_each([&](const CircularOrdering& sigma,
                                  const FlipAssignment& t) {
        MetricsReport m = compute_metrics(star, sigma, t);
        const double s = score(problem, m);
        if (!have || s < best ||
            (s == best && lex_less(sigma, t, best_sigma, best_t))) {
            have = true;
            best = s;
            best_sigma = sigma;
            best_t = t;
        }
    });

    OracleResult r;
    r.solution = Solution::make(star, best_sigma, best_t, "oracle", true);
    r.optimum = problem == Problem::RE ? -best : best;
    return r;
}

namespace {

DecisionResult decide(const StarInstance& star, const OracleBudget& budget,
                      const std::function<bool(const MetricsReport&)>& ok) {
    check_budget(star, budget);
    DecisionResult r;
    CircularOrdering wit_sigma;
    FlipAssignment wit_t;
    Enumerator(star).for_each([&](const CircularOrdering& sigma,
                                  const FlipAssignment& t) {
        if (r.yes) return;
        if (ok(compute_metrics(star, sigma, t))) {
            r.yes = true;
            wit_sigma = sigma;
            wit_t = t;
        }
    });
    if (r.yes) r.witness = Solution::make(star, wit_sigma, wit_t, "oracle", false);
    return r;
}

}  // namespace

DecisionResult decide_angle_range(const StarInstance& star, double lo,
                                  double hi, const OracleBudget& budget) {
    const double tol = 1e-12;
    return decide(star, budget, [&](const MetricsReport& m) {
        for (double a : m.angles)
            if (a < lo - tol || a > hi + tol) return false;
        return true;
    });
}

DecisionResult decide_sop_at_most(const StarInstance& star, double ub,
                                  const OracleBudget& budget) {
    return decide(star, budget,
                  [&](const MetricsReport& m) { return m.sop <= ub + 1e-12; });
}

}  // namespace balloon
