#include "balloon/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace balloon {

Ra4Gadget gen_ra4_from_2slw(const TwoStationInstance& tsi) {
    if (tsi.n() < 1)
        throw InvalidArgumentError("two-station instance needs at least one job");
    if (tsi.lb > tsi.ub)
        throw InvalidArgumentError("two-station bounds must satisfy lb <= ub");
    double w_max = 0.0, total = 0.0;
    for (const auto& j : tsi.jobs) {
        if (j[0] < 0.0 || j[1] < 0.0)
            throw InvalidArgumentError("job weights must be nonnegative");
        w_max = std::max({w_max, j[0], j[1]});
    }
    for (const auto& j : tsi.jobs) total += j[0] + j[1] + w_max;
    if (!(total > 0.0))
        throw DegenerateInstanceError("all job weights are zero");

    Ra4Gadget g;
    g.w_max = w_max;
    g.rho = kTwoPi / total;
    g.instance.case_tag = CaseTag::C4;
    for (const auto& j : tsi.jobs)
        g.instance.children.push_back({j[0] * g.rho, (j[1] + w_max) * g.rho});
    g.instance.normalized = true;
    g.angle_lo = (tsi.lb + w_max) * g.rho;
    g.angle_hi = (tsi.ub + w_max) * g.rho;
    return g;
}

bool two_station_feasible(const TwoStationInstance& tsi,
                          const std::vector<int>& order) {
    const int n = tsi.n();
    for (int i = 0; i < n; ++i) {
        const int a = order[i], b = order[(i + 1) % n];
        const double load = tsi.jobs[a][1] + tsi.jobs[b][0];
        if (load < tsi.lb || load > tsi.ub) return false;
    }
    return true;
}

CubicGraph CubicGraph::from_edges(int n,
                                  const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw InvalidArgumentError("bad edge in graph description");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw InvalidArgumentError("duplicate edge in graph description");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    CubicGraph g;
    g.n = n;
    g.neighbors.resize(n);
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() != 3)
            throw InvalidArgumentError("node " + std::to_string(v) +
                                       " has degree " +
                                       std::to_string(adj[v].size()) +
                                       "; the graph must be cubic");
        std::sort(adj[v].begin(), adj[v].end());
        std::copy(adj[v].begin(), adj[v].end(), g.neighbors[v].begin());
    }
    return g;
}

bool CubicGraph::adjacent(int a, int b) const {
    return std::find(neighbors[a].begin(), neighbors[a].end(), b) !=
           neighbors[a].end();
}

namespace {

// Slot in block `host` that carries the copy of node `x` (x must neighbor
// host): the three v-slots host the sorted neighbors in order.
int vslot_of(const CubicGraph& g, int host, int x) {
    for (int k = 0; k < 3; ++k)
        if (g.neighbors[host][k] == x) return kVSlots[k];
    throw InvalidArgumentError("node is not adjacent to the block's node");
}

}  // namespace

De4Gadget gen_de4_from_cubic(const CubicGraph& g) {
    if (g.n < 2)
        throw InvalidArgumentError("need at least two blocks");
    De4Gadget out;
    out.graph = g;
    const long long n = g.n;

    // Upper values descend across (block, slot); lower values ascend.
    static constexpr long long kUpperDrop[7] = {0, 2, 3, 4, 6, 8, 9};
    static constexpr long long kLowerRise[7] = {0, 1, 2, 3, 5, 7, 9};
    out.upper.resize(g.n);
    out.lower.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        const long long kappa = 9 * n * (2 * n + 2 - (i + 1));
        const long long base = 9 * n * (i + 1);
        for (int j = 0; j < 7; ++j) {
            out.upper[i][j] = kappa - kUpperDrop[j];
            out.lower[i][j] = base + kLowerRise[j];
        }
    }

    using E = GadgetEndpointId;
    // b-pairs: vertical city edges at the two b slots.
    for (int i = 0; i < g.n; ++i)
        for (int slot : kBSlots)
            out.city_edges.push_back({E::id(i, 0, slot), E::id(i, 1, slot)});
    // v-triples: node x's copies sit in its neighbors' blocks (sorted order)
    // and are chained cyclically upper-to-lower.
    out.vslot_host.resize(3 * g.n);
    for (int x = 0; x < g.n; ++x) {
        std::array<int, 3> host_block;
        std::array<int, 3> host_slot;
        for (int k = 0; k < 3; ++k) {
            host_block[k] = g.neighbors[x][k];
            host_slot[k] = vslot_of(g, host_block[k], x);
            out.vslot_host[3 * x + k] = {host_block[k], host_slot[k]};
        }
        for (int k = 0; k < 3; ++k) {
            const int kn = (k + 1) % 3;
            out.city_edges.push_back({E::id(host_block[k], 0, host_slot[k]),
                                      E::id(host_block[kn], 1, host_slot[kn])});
        }
    }
    // lambda chain: within a block, lower slot 1 joins upper slot 6; across
    // blocks, lower slot 6 joins the next block's upper slot 1.
    for (int i = 0; i < g.n; ++i) {
        out.city_edges.push_back(
            {E::id(i, 1, kLambdaSlots[0]), E::id(i, 0, kLambdaSlots[1])});
        out.city_edges.push_back({E::id(i, 1, kLambdaSlots[1]),
                                  E::id((i + 1) % g.n, 0, kLambdaSlots[0])});
    }

    // One child per city edge; order the pair as (upper first).
    out.instance.case_tag = CaseTag::C4;
    for (auto& [a, b] : out.city_edges) {
        if (E::side(a) == 1) std::swap(a, b);
        out.instance.children.push_back(
            {static_cast<double>(out.value(a)), static_cast<double>(out.value(b))});
    }

    // ub = sum of sorted vertical products + 7n. The (block, slot) order IS
    // the sorted order on both sides, so the products pair matching slots.
    long long vertical = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < 7; ++j) vertical += out.upper[i][j] * out.lower[i][j];
    out.ub = vertical + 7 * n;
    return out;
}

GadgetMatching gadget_vertical_matching(const De4Gadget& g) {
    GadgetMatching m;
    using E = GadgetEndpointId;
    for (int i = 0; i < g.blocks(); ++i)
        for (int j = 0; j < 7; ++j)
            m.edges.push_back({E::id(i, 0, j), E::id(i, 1, j)});
    return m;
}

namespace {

// The three per-block transition patterns, as upper-slot -> lower-slot maps.
// Pattern for a successor hosted at slot 0 crosses (0,1)(2,3)(4,5); at slot 3
// it runs the 1->2->3->1 three-cycle plus (4,5); at slot 5 it crosses
// (1,2)(3,4)(5,6).
std::array<int, 7> block_pattern_for_slot(int vslot) {
    switch (vslot) {
        case 0: return {1, 0, 3, 2, 5, 4, 6};
        case 3: return {0, 2, 3, 1, 5, 4, 6};
        case 5: return {0, 2, 1, 4, 3, 6, 5};
        default:
            throw InvalidArgumentError("not a v-node slot");
    }
}

}  // namespace

GadgetMatching hc_to_transition_matching(const De4Gadget& g,
                                         const std::vector<int>& hc) {
    const int n = g.blocks();
    if (static_cast<int>(hc.size()) != n)
        throw InvalidArgumentError("cycle must visit every node exactly once");
    std::vector<char> seen(n, 0);
    for (int v : hc) {
        if (v < 0 || v >= n || seen[v])
            throw InvalidArgumentError("cycle must visit every node exactly once");
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.graph.adjacent(hc[i], hc[(i + 1) % n]))
            throw InvalidArgumentError(
                "consecutive cycle nodes are not adjacent in the graph");

    GadgetMatching m;
    using E = GadgetEndpointId;
    std::vector<std::array<int, 7>> pattern(n);
    for (int i = 0; i < n; ++i) {
        const int v = hc[i], w = hc[(i + 1) % n];
        pattern[v] = block_pattern_for_slot(vslot_of(g.graph, v, w));
    }
    for (int b = 0; b < n; ++b)
        for (int j = 0; j < 7; ++j)
            m.edges.push_back({E::id(b, 0, j), E::id(b, 1, pattern[b][j])});
    return m;
}

ChcReport verify_chc(const De4Gadget& g, const GadgetMatching& n) {
    const int total = 14 * g.blocks();
    using E = GadgetEndpointId;

    std::vector<int> n_partner(total, -1);
    for (auto [a, b] : n.edges) {
        if (a < 0 || b < 0 || a >= total || b >= total || n_partner[a] >= 0 ||
            n_partner[b] >= 0 || a == b)
            throw InvalidArgumentError("matching is not perfect on the gadget");
        n_partner[a] = b;
        n_partner[b] = a;
    }
    for (int ep = 0; ep < total; ++ep)
        if (n_partner[ep] < 0)
            throw InvalidArgumentError("matching is not perfect on the gadget");

    std::vector<int> i0_partner(total, -1);
    for (auto [a, b] : g.city_edges) {
        i0_partner[a] = b;
        i0_partner[b] = a;
    }

    ChcReport rep;
    rep.block_delta.assign(g.blocks(), 0);
    std::vector<char> block_mixed(g.blocks(), 0);
    for (auto [a, b] : n.edges) {
        rep.cost += g.value(a) * g.value(b);
        if (E::side(a) == E::side(b))
            rep.violations.push_back("cross-side edge at endpoints " +
                                     std::to_string(a) + "," + std::to_string(b));
        if (E::block(a) != E::block(b)) {
            rep.violations.push_back("cross-block edge between blocks " +
                                     std::to_string(E::block(a)) + " and " +
                                     std::to_string(E::block(b)));
            block_mixed[E::block(a)] = block_mixed[E::block(b)] = 1;
        } else {
            rep.block_delta[E::block(a)] += g.value(a) * g.value(b);
        }
    }
    for (int i = 0; i < g.blocks(); ++i) {
        if (block_mixed[i]) {
            rep.block_delta[i] = -1;
            continue;
        }
        long long vertical = 0;
        for (int j = 0; j < 7; ++j) vertical += g.upper[i][j] * g.lower[i][j];
        rep.block_delta[i] -= vertical;
    }

    std::vector<char> visited(total, 0);
    for (int start = 0; start < total; ++start) {
        if (visited[start]) continue;
        ++rep.eta;
        int ep = start;
        bool via_i0 = true;
        do {
            visited[ep] = 1;
            ep = via_i0 ? i0_partner[ep] : n_partner[ep];
            via_i0 = !via_i0;
        } while (ep != start);
    }
    rep.is_chc = rep.eta == 1 && rep.violations.empty();
    return rep;
}

CubicGraph random_cubic_graph(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw InvalidArgumentError(
            "a cubic graph needs an even node count of at least 4");
    std::mt19937_64 rng(seed);
    // pairing model: three stubs per node, rejected until simple
    std::vector<int> stubs(3 * n);
    for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (int i = 0; i < 3 * n && ok; i += 2) {
            const auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
            if (a == b || !edges.insert({a, b}).second) ok = false;
        }
        if (ok)
            return CubicGraph::from_edges(
                n, {edges.begin(), edges.end()});
    }
    throw DegenerateInstanceError("could not sample a simple cubic graph");
}

TwoStationInstance random_two_station(int n, std::uint64_t seed,
                                      int max_weight) {
    if (n < 1 || max_weight < 1)
        throw InvalidArgumentError("need at least one job and positive weights");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(0, max_weight);
    TwoStationInstance tsi;
    for (int i = 0; i < n; ++i)
        tsi.jobs.push_back(
            {double(weight(rng)), double(weight(rng))});
    // band around the average period load, wide enough to be interesting
    double total = 0.0;
    for (const auto& j : tsi.jobs) total += j[0] + j[1];
    const double mean = total / n;
    tsi.lb = std::max(0.0, std::floor(mean - max_weight / 2.0));
    tsi.ub = std::ceil(mean + max_weight / 2.0);
    return tsi;
}

std::array<long long, 6> block_consecutive_products(const De4Gadget& g,
                                                    int block) {
    std::array<long long, 6> p{};
    for (int j = 0; j < 6; ++j)
        p[j] = (g.upper[block][j] - g.upper[block][j + 1]) *
               (g.lower[block][j + 1] - g.lower[block][j]);
    return p;
}

}  // namespace balloon
