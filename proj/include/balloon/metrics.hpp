#pragma once

#include <string>
#include <vector>

#include "balloon/star.hpp"

namespace balloon {

// The four angle-based quality measures of one star drawing.
struct MetricsReport {
    std::vector<double> angles;       // theta_1..theta_n in drawing order
    double ang_resl = 0.0;            // min angle
    double asp_ratio = 1.0;           // max/min; +inf sentinel when min == 0
    bool asp_ratio_infinite = false;
    double std_dev = 0.0;
    double sop = 0.0;                 // sum of adjacent sub-wedge products
};

// theta_p = w_{t'(sigma_p)}(sigma_p) + w_{t(sigma_{p+1})}(sigma_{p+1}), with
// circular wraparound (position n-1 pairs with position 0). For n = 1 the
// single angle is the child's whole wedge, w0 + w1.
std::vector<double> angle_sequence(const StarInstance& star,
                                   const CircularOrdering& sigma,
                                   const FlipAssignment& t);

MetricsReport compute_metrics(const StarInstance& star,
                              const CircularOrdering& sigma,
                              const FlipAssignment& t);

// One solver's answer for one star instance.
struct Solution {
    CircularOrdering ordering;
    FlipAssignment flips;
    MetricsReport metrics;
    std::string solver_name;
    bool claims_optimal = false;

    static Solution make(const StarInstance& star, CircularOrdering sigma,
                         FlipAssignment t, std::string solver,
                         bool optimal);
};

}  // namespace balloon
