#pragma once

#include <span>

#include "balloon/bipartite.hpp"

namespace balloon {

// Complete graph over the subcycles of I0 union N_D. Edge cost psi is the
// cheapest exchange that merges the two subcycles: min over cross-cycle label
// pairs (a, b) of (V_a - V_b) * (U_b - U_a). Witnesses realize the minimum;
// ties keep the lexicographically smallest (a, b).
struct ExchangeGraph {
    int eta = 0;
    std::vector<std::vector<double>> psi;                 // eta x eta
    std::vector<std::vector<std::pair<int, int>>> witness;  // rank pairs
};

ExchangeGraph build_exchange_graph(const BipartiteModel& model,
                                   const SubcycleInfo& cycles);

struct SpanningTree {
    std::vector<std::pair<int, int>> edges;  // subcycle ids, eta-1 of them
    double total_psi = 0.0;
};

// Deterministic minimum spanning tree over the exchange graph (ties broken by
// endpoint ids).
SpanningTree minimum_spanning_tree(const ExchangeGraph& graph);

// Groups of ranks whose witness pairs are chained by shared labels; each
// group is rematched as one block. Groups are returned sorted by smallest
// rank, each group ascending.
std::vector<std::vector<int>> merge_witness_sets(
    int n, std::span<const std::pair<int, int>> witness_pairs);

struct ApproxCertificate {
    double c_nd = 0.0;   // cost of the sorted vertical matching
    double c_lb = 0.0;   // c_nd plus the spanning tree's psi total
    double c_apx = 0.0;  // cost of the emitted matching
    int eta = 0;         // subcycles before merging
};

struct ApproxResult {
    Solution solution;
    ApproxCertificate cert;
    Matching matching;
};

// Sum-of-products 2-approximation (C3/C4): rematch every merged group
// cyclically (j-th largest with (j+1)-th smallest, last largest with the
// smallest). Guarantees c_apx <= 2*c_lb <= 2*c_opt. O(n^2).
ApproxResult approx_sop(const StarInstance& star);

// Standard-deviation approximation (C3/C4): same pipeline, but each merged
// group is rematched by the available-extreme greedy, giving
// c_apx - c_nd <= n * (c_opt - c_nd). O(n^2).
ApproxResult approx_de(const StarInstance& star);

// Aspect-ratio 2-approximation (C3/C4): the cycle-merge matching, whose
// minimum angle is optimal and whose maximum is at most twice the optimal
// maximum.
ApproxResult approx_ra(const StarInstance& star);

// Lower bound for the cost sum(x_i * y_{p(i)}) of a permutation p consisting
// of one cycle through all indices, with x descending and y ascending:
// sum x_i y_i + sum_{i<n} (x_i - x_{i+1}) (y_{i+1} - y_i), plus n-2 more when
// the gap premise holds. A trivial (size-1) factor returns just x_0 * y_0.
double cycle_cost_lower_bound(std::span<const double> x_desc, std::span<const double> y_asc,
                    bool include_gap_term);

// Premise of the strengthened bound: every cross product
// (x_j - x_{i+1})(y_{i+1} - y_{j'}) with j, j' <= i, (j, j') != (i, i),
// exceeds the consecutive product (x_i - x_{i+1})(y_{i+1} - y_i) by >= 1.
bool cycle_bound_gap_premise(std::span<const double> x_desc,
                        std::span<const double> y_asc);

// Cost of a single-cycle permutation given as factor[i] = image of index i.
double permutation_cost(std::span<const double> x, std::span<const double> y,
                        std::span<const int> perm);

}  // namespace balloon
