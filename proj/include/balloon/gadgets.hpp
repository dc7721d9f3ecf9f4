#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "balloon/bipartite.hpp"
#include "balloon/metrics.hpp"

namespace balloon {

// Cyclic two-station workforce-leveling instance: job i needs W_{i1} workers
// at the first station and W_{i2} at the second; feasibility asks for a
// circular job order keeping every period's total inside [lb, ub].
struct TwoStationInstance {
    std::vector<std::array<double, 2>> jobs;
    double lb = 0.0;
    double ub = 0.0;

    int n() const { return static_cast<int>(jobs.size()); }
};

// Reduction of a two-station instance to an aspect-ratio (C4) star instance:
// with Wmax the largest task weight and rho = 2*pi / sum(W_i1 + W_i2 + Wmax),
// child i gets sub-wedges (W_i1 * rho, (W_i2 + Wmax) * rho) and the feasible
// band [lb, ub] maps to angles in [(lb+Wmax)*rho, (ub+Wmax)*rho]. The result
// is normalized by construction.
struct Ra4Gadget {
    StarInstance instance;
    double angle_lo = 0.0;  // A
    double angle_hi = 0.0;  // B
    double rho = 0.0;
    double w_max = 0.0;
};

Ra4Gadget gen_ra4_from_2slw(const TwoStationInstance& tsi);

// Feasibility check of a circular job order against [lb, ub].
bool two_station_feasible(const TwoStationInstance& tsi,
                          const std::vector<int>& order);

// Simple undirected 3-regular graph.
struct CubicGraph {
    int n = 0;
    std::vector<std::array<int, 3>> neighbors;  // sorted per node

    static CubicGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    bool adjacent(int a, int b) const;
};

// Gadget endpoints are addressed as (block, slot, side): n blocks of 7 slots,
// side 0 = upper (large values), side 1 = lower. Slot roles left to right:
// v-node, lambda, b-node, v-node, b-node, v-node, lambda.
struct GadgetEndpointId {
    static constexpr int slots = 7;
    static int id(int block, int side, int slot) {
        return block * 14 + side * 7 + slot;
    }
    static int block(int id) { return id / 14; }
    static int side(int id) { return (id % 14) / 7; }
    static int slot(int id) { return id % 7; }
};

inline constexpr int kVSlots[3] = {0, 3, 5};
inline constexpr int kLambdaSlots[2] = {1, 6};
inline constexpr int kBSlots[2] = {2, 4};

// Perfect matching over gadget endpoints; edges in no particular order.
struct GadgetMatching {
    std::vector<std::pair<int, int>> edges;
};

// The three families of city edges.
enum class CityKind { BPair, VTriple, LambdaChain };

// Standard-deviation (C4) hardness instance built from a cubic graph: one
// block of 7 upper/lower value pairs per graph node, the fixed city matching
// I0 (b-pairs, v-triples across neighbor blocks, lambda chain), and the
// integer budget ub = sum of the sorted vertical products + 7n.
struct De4Gadget {
    CubicGraph graph;
    StarInstance instance;                     // 7n children, one per I0 edge
    std::vector<std::array<long long, 7>> upper;  // A values per block
    std::vector<std::array<long long, 7>> lower;  // B values per block
    std::vector<std::pair<int, int>> city_edges;  // endpoint ids; child k <-> edge k
    std::vector<std::array<int, 2>> vslot_host;   // per (node, copy): {block, slot}
    long long ub = 0;

    int blocks() const { return graph.n; }
    // city_edges holds the 2n b-pairs, then the 3n v-triple edges, then the
    // 2n lambda-chain edges
    CityKind city_kind(int child) const {
        if (child < 2 * blocks()) return CityKind::BPair;
        if (child < 5 * blocks()) return CityKind::VTriple;
        return CityKind::LambdaChain;
    }
    long long upper_value(int ep) const {
        return upper[GadgetEndpointId::block(ep)][GadgetEndpointId::slot(ep)];
    }
    long long lower_value(int ep) const {
        return lower[GadgetEndpointId::block(ep)][GadgetEndpointId::slot(ep)];
    }
    long long value(int ep) const {
        return GadgetEndpointId::side(ep) == 0 ? upper_value(ep) : lower_value(ep);
    }
};

De4Gadget gen_de4_from_cubic(const CubicGraph& g);

// Random fixture synthesis (seeded, reproducible): a simple cubic graph on n
// nodes via the pairing model (n even, n >= 4), and an n-job two-station
// instance with integer weights in [0, max_weight] and a band around the
// median load.
CubicGraph random_cubic_graph(int n, std::uint64_t seed);
TwoStationInstance random_two_station(int n, std::uint64_t seed,
                                      int max_weight = 9);

// The vertical transition matching: slot j upper with slot j lower per block.
GadgetMatching gadget_vertical_matching(const De4Gadget& g);

// Chooses, per block, the transition matching that threads the given
// Hamiltonian cycle of the source graph through the master lambda cycle.
// The result satisfies c(N) = ub exactly. Throws InvalidArgumentError when
// the cycle is not a Hamiltonian cycle of the graph.
GadgetMatching hc_to_transition_matching(const De4Gadget& g,
                                         const std::vector<int>& hamiltonian_cycle);

struct ChcReport {
    int eta = 0;                    // cycles in I0 union N
    long long cost = 0;             // sum of products over N edges
    std::vector<long long> block_delta;  // c(N_i) - vertical cost, -1 if mixed
    std::vector<std::string> violations;  // cross-side / cross-block edges
    bool is_chc = false;            // eta == 1 and no violations
};

// Structural diagnosis of a candidate transition matching.
ChcReport verify_chc(const De4Gadget& g, const GadgetMatching& n);

// Per-block consecutive products (x_j - x_{j+1}) * (y_{j+1} - y_j) of the
// block values; equals {2, 1, 1, 4, 4, 2} for every block.
std::array<long long, 6> block_consecutive_products(const De4Gadget& g, int block);

}  // namespace balloon
