#include "balloon/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace balloon {

std::vector<double> angle_sequence(const StarInstance& star,
                                   const CircularOrdering& sigma,
                                   const FlipAssignment& t) {
    const int n = star.n();
    if (sigma.size() != n || t.size() != n)
        throw InvalidArgumentError("ordering/flip length does not match child count");
    if (!is_permutation(sigma, n))
        throw InvalidArgumentError("ordering is not a permutation of the children");

    std::vector<double> theta(n);
    for (int p = 0; p < n; ++p) {
        const int a = sigma.at(p);
        const int b = sigma.at((p + 1) % n);
        theta[p] = star.wedge(a, t.flipped(a)) + star.wedge(b, t.bit(b));
    }
    return theta;
}

MetricsReport compute_metrics(const StarInstance& star,
                              const CircularOrdering& sigma,
                              const FlipAssignment& t) {
    MetricsReport m;
    m.angles = angle_sequence(star, sigma, t);
    const int n = static_cast<int>(m.angles.size());

    double mn = m.angles[0], mx = m.angles[0], sum = 0.0, sum_sq = 0.0;
    for (double a : m.angles) {
        mn = std::min(mn, a);
        mx = std::max(mx, a);
        sum += a;
        sum_sq += a * a;
    }
    m.ang_resl = mn;
    if (mn > 0.0) {
        m.asp_ratio = mx / mn;
    } else {
        m.asp_ratio = std::numeric_limits<double>::infinity();
        m.asp_ratio_infinite = true;
    }
    const double mean = sum / n;
    m.std_dev = std::sqrt(std::max(0.0, sum_sq / n - mean * mean));

    double sop = 0.0;
    for (int p = 0; p < n; ++p) {
        const int a = sigma.at(p);
        const int b = sigma.at((p + 1) % n);
        sop += star.wedge(a, t.flipped(a)) * star.wedge(b, t.bit(b));
    }
    m.sop = sop;
    return m;
}

Solution Solution::make(const StarInstance& star, CircularOrdering sigma,
                        FlipAssignment t, std::string solver, bool optimal) {
    Solution s;
    s.metrics = compute_metrics(star, sigma, t);
    s.ordering = std::move(sigma);
    s.flips = std::move(t);
    s.solver_name = std::move(solver);
    s.claims_optimal = optimal;
    return s;
}

}  // namespace balloon
