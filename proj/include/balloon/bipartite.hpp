#pragma once

#include <utility>
#include <vector>

#include "balloon/metrics.hpp"

namespace balloon {

enum class CostRule { Sum, Product };

// Bipartite view of a star instance: every sub-wedge becomes a node on side V
// or side U, and a perfect matching N between the sides fixes which sub-wedges
// meet in an angle. The fixed pairing I0 joins each child's two sub-wedges;
// I0 together with N decomposes into cycles, and the drawing is valid exactly
// when that union is one Hamiltonian cycle.
//
// Side assignment: C3 puts every first sub-wedge (w0, the given orientation)
// in V and every second in U. C4 and C1 put the n largest of all 2n
// sub-wedges in V and the n smallest in U.
//
// Ranks: V is sorted nonincreasing (rank 0 = largest), U nondecreasing
// (rank 0 = smallest). Ties are broken by child then side, so duplicate
// values get deterministic labels.
struct BipartiteModel {
    CaseTag case_tag = CaseTag::C4;
    CostRule rule = CostRule::Sum;
    int n = 0;

    std::vector<double> v_value, u_value;   // by rank
    std::vector<int> v_endpoint, u_endpoint;  // rank -> endpoint id (2*child+side)
    std::vector<int> rank_of_endpoint;        // endpoint id -> rank on its side
    std::vector<char> side_of_endpoint;       // 'V' or 'U'

    int endpoint_child(int ep) const { return ep / 2; }
    int endpoint_side(int ep) const { return ep % 2; }
    int i0_partner(int ep) const { return ep ^ 1; }
    double edge_cost(int v_rank, int u_rank) const {
        return rule == CostRule::Sum ? v_value[v_rank] + u_value[u_rank]
                                     : v_value[v_rank] * u_value[u_rank];
    }
};

BipartiteModel make_bipartite_model(const StarInstance& star, CostRule rule);

// Perfect matching between the sides, stored as V-rank -> U-rank.
struct Matching {
    std::vector<int> u_of_v;

    int size() const { return static_cast<int>(u_of_v.size()); }
    std::vector<int> v_of_u() const;
    static Matching identity(int n);
};

// N_D: rank i of V matched with rank i of U (i-th max with i-th min).
Matching default_matching(const BipartiteModel& model);

double matching_cost(const BipartiteModel& model, const Matching& N);
double min_edge_cost(const BipartiteModel& model, const Matching& N);

// Swaps the partners of two matching edges, given as (v_rank, u_rank) pairs.
// Throws InvalidArgumentError when either pair is not an edge of N or the
// edges coincide.
Matching exchange(const Matching& N, std::pair<int, int> e1,
                  std::pair<int, int> e2);

struct SubcycleInfo {
    std::vector<int> cycle_of_endpoint;  // cycle id per endpoint, 0..eta-1
    int eta = 0;

    int cycle_of_vrank(const BipartiteModel& m, int rank) const {
        return cycle_of_endpoint[m.v_endpoint[rank]];
    }
};

// Decomposes I0 union N into its cycles.
SubcycleInfo subcycles(const BipartiteModel& model, const Matching& N);

bool is_hamiltonian(const BipartiteModel& model, const Matching& N);

// Reads a Hamiltonian I0-union-N cycle back into a drawing. C3 keeps the
// given orientation (t = 0); C1/C4 derive each t bit from which sub-wedge the
// traversal meets first and return the lexicographically smaller of the two
// traversal directions. Throws InvalidArgumentError when N is not Hamiltonian.
std::pair<CircularOrdering, FlipAssignment> decode_matching(
    const BipartiteModel& model, const Matching& N);

// Sorted-merge angular-resolution solver: starts from the max-min matching
// (rank i with rank i) and, scanning candidate angles in nonincreasing order,
// exchanges pairs whose endpoints lie in different cycles until I0 union N is
// one Hamiltonian cycle. O(n log n). Exact for C3/C4/C1 angular resolution
// and a 2-approximation for aspect ratio.
Matching merge_cycles_matching(const BipartiteModel& model);

}  // namespace balloon
