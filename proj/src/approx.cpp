#include "balloon/approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace balloon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

ExchangeGraph build_exchange_graph(const BipartiteModel& model,
                                   const SubcycleInfo& cycles) {
    ExchangeGraph g;
    g.eta = cycles.eta;
    g.psi.assign(g.eta, std::vector<double>(g.eta, kInf));
    g.witness.assign(g.eta, std::vector<std::pair<int, int>>(g.eta, {-1, -1}));

    const int n = model.n;
    // scan per cycle pair over contiguous copies; only cross pairs do work
    std::vector<std::vector<int>> ranks(g.eta);
    std::vector<std::vector<double>> vv(g.eta), uu(g.eta);
    for (int r = 0; r < n; ++r) {
        const int c = cycles.cycle_of_vrank(model, r);
        ranks[c].push_back(r);
        vv[c].push_back(model.v_value[r]);
        uu[c].push_back(model.u_value[r]);
    }

    for (int ca = 0; ca < g.eta; ++ca)
        for (int cb = ca + 1; cb < g.eta; ++cb) {
            double best = kInf;
            int wa = -1, wb = -1;
            for (size_t i = 0; i < ranks[ca].size(); ++i) {
                const double va = vv[ca][i], ua = uu[ca][i];
                const double* vb = vv[cb].data();
                const double* ub = uu[cb].data();
                const size_t len = ranks[cb].size();
                for (size_t j = 0; j < len; ++j) {
                    const double p = (va - vb[j]) * (ub[j] - ua);
                    if (p < best) {
                        best = p;
                        const int x = ranks[ca][i], y = ranks[cb][j];
                        wa = std::min(x, y);
                        wb = std::max(x, y);
                    } else if (p == best) {
                        const int x = ranks[ca][i], y = ranks[cb][j];
                        const auto cand = std::minmax(x, y);
                        if (std::pair(cand.first, cand.second) <
                            std::pair(wa, wb)) {
                            wa = cand.first;
                            wb = cand.second;
                        }
                    }
                }
            }
            g.psi[ca][cb] = g.psi[cb][ca] = best;
            g.witness[ca][cb] = g.witness[cb][ca] = {wa, wb};
        }
    return g;
}

SpanningTree minimum_spanning_tree(const ExchangeGraph& graph) {
    SpanningTree t;
    const int eta = graph.eta;
    if (eta <= 1) return t;

    struct Edge {
        double w;
        int a, b;
    };
    std::vector<Edge> edges;
    edges.reserve(eta * (eta - 1) / 2);
    for (int a = 0; a < eta; ++a)
        for (int b = a + 1; b < eta; ++b)
            if (graph.psi[a][b] < kInf) edges.push_back({graph.psi[a][b], a, b});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.w != y.w) return x.w < y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    Dsu dsu(eta);
    for (const Edge& e : edges) {
        if (!dsu.unite(e.a, e.b)) continue;
        t.edges.emplace_back(e.a, e.b);
        t.total_psi += e.w;
        if (static_cast<int>(t.edges.size()) == eta - 1) break;
    }
    if (static_cast<int>(t.edges.size()) != eta - 1)
        throw InvalidArgumentError("exchange graph is not connected");
    return t;
}

std::vector<std::vector<int>> merge_witness_sets(
    int n, std::span<const std::pair<int, int>> witness_pairs) {
    Dsu dsu(n);
    std::vector<char> used(n, 0);
    for (const auto& [a, b] : witness_pairs) {
        dsu.unite(a, b);
        used[a] = used[b] = 1;
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(n, -1);
    for (int r = 0; r < n; ++r) {
        if (!used[r]) continue;
        const int root = dsu.find(r);
        if (group_of[root] < 0) {
            group_of[root] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[root]].push_back(r);
    }
    return groups;  // ranks ascend within each group; groups by first rank
}

namespace {

// Rematching rule applied to one merged group, via local positions 0..l-1
// over the group's ranks (position 0 = largest V / smallest U).
using GroupMatcher = void (*)(const BipartiteModel&, const std::vector<int>&,
                              Matching&);

void rematch_cyclic(const BipartiteModel&, const std::vector<int>& ranks,
                    Matching& N) {
    const int l = static_cast<int>(ranks.size());
    for (int j = 0; j < l; ++j) N.u_of_v[ranks[j]] = ranks[(j + 1) % l];
}

// Available-extreme greedy: while more than two pairs remain, match either
// the largest remaining V with the second-smallest remaining U, or the
// smallest remaining U with the second-largest remaining V, depending on
// which adjacent V-gap dominates; the two leftover pairs close crosswise.
void rematch_greedy(const BipartiteModel& model, const std::vector<int>& ranks,
                    Matching& N) {
    const int l = static_cast<int>(ranks.size());
    if (l == 2) {
        N.u_of_v[ranks[0]] = ranks[1];
        N.u_of_v[ranks[1]] = ranks[0];
        return;
    }
    std::vector<char> v_used(l, 0), u_used(l, 0);
    // Local positions: v position p has value model.v_value[ranks[p]]
    // (nonincreasing in p); u position p likewise nondecreasing.
    auto v_gap = [&](int j) {  // gap between positions j and j+1
        return model.v_value[ranks[j]] - model.v_value[ranks[j + 1]];
    };
    auto nth_available = [&](std::vector<char>& used, bool from_low, int which) {
        int seen = 0;
        if (from_low) {
            for (int p = 0; p < l; ++p)
                if (!used[p] && seen++ == which) return p;
        } else {
            for (int p = l - 1; p >= 0; --p)
                if (!used[p] && seen++ == which) return p;
        }
        throw InvalidArgumentError("greedy rematch ran out of elements");
    };

    for (int j = 0; j + 2 < l; ++j) {
        int vp, up;
        if (v_gap(j) >= v_gap(j + 1)) {
            vp = nth_available(v_used, true, 0);   // largest remaining V
            up = nth_available(u_used, true, 1);   // second-smallest remaining U
        } else {
            up = nth_available(u_used, true, 0);   // smallest remaining U
            vp = nth_available(v_used, true, 1);   // second-largest remaining V
        }
        v_used[vp] = u_used[up] = 1;
        N.u_of_v[ranks[vp]] = ranks[up];
    }
    // Two of each side remain; the extremes close the cycle crosswise.
    const int v_last = nth_available(v_used, false, 0);   // smallest remaining V
    const int v_other = nth_available(v_used, true, 0);
    const int u_last = nth_available(u_used, false, 0);   // largest remaining U
    const int u_other = nth_available(u_used, true, 0);
    N.u_of_v[ranks[v_other]] = ranks[u_last];
    N.u_of_v[ranks[v_last]] = ranks[u_other];
}

ApproxResult run_pipeline(const StarInstance& star, GroupMatcher rematch,
                          const char* solver_name) {
    validate_star(star);
    if (star.case_tag != CaseTag::C3 && star.case_tag != CaseTag::C4)
        throw InvalidArgumentError(
            "matching approximation applies to the unordered uneven cases");

    BipartiteModel model = make_bipartite_model(star, CostRule::Product);
    Matching nd = default_matching(model);
    SubcycleInfo cycles = subcycles(model, nd);

    ApproxResult res;
    res.cert.eta = cycles.eta;
    res.cert.c_nd = matching_cost(model, nd);

    Matching N = nd;
    if (cycles.eta == 1) {
        res.cert.c_lb = res.cert.c_nd;
    } else {
        ExchangeGraph graph = build_exchange_graph(model, cycles);
        SpanningTree tree = minimum_spanning_tree(graph);
        res.cert.c_lb = res.cert.c_nd + tree.total_psi;

        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(tree.edges.size());
        for (const auto& [a, b] : tree.edges) pairs.push_back(graph.witness[a][b]);
        for (const auto& group : merge_witness_sets(model.n, pairs))
            rematch(model, group, N);
    }
    res.cert.c_apx = matching_cost(model, N);

    auto [sigma, t] = decode_matching(model, N);
    canonicalize(star.case_tag, sigma, t);
    res.solution = Solution::make(star, std::move(sigma), std::move(t),
                                  solver_name, false);
    res.matching = std::move(N);
    return res;
}

}  // namespace

ApproxResult approx_sop(const StarInstance& star) {
    return run_pipeline(star, &rematch_cyclic, "sop-mst-2approx");
}

ApproxResult approx_de(const StarInstance& star) {
    return run_pipeline(star, &rematch_greedy, "de-mst-approx");
}

ApproxResult approx_ra(const StarInstance& star) {
    validate_star(star);
    if (star.case_tag != CaseTag::C3 && star.case_tag != CaseTag::C4 &&
        star.case_tag != CaseTag::C1)
        throw InvalidArgumentError(
            "aspect-ratio approximation applies to the unordered cases");

    BipartiteModel model = make_bipartite_model(star, CostRule::Sum);
    Matching N = merge_cycles_matching(model);

    ApproxResult res;
    res.cert.eta = 1;
    res.cert.c_nd = res.cert.c_lb = res.cert.c_apx = matching_cost(model, N);
    auto [sigma, t] = decode_matching(model, N);
    canonicalize(star.case_tag, sigma, t);
    res.solution = Solution::make(star, std::move(sigma), std::move(t),
                                  "ra-2approx", false);
    res.matching = std::move(N);
    return res;
}

double permutation_cost(std::span<const double> x, std::span<const double> y,
                        std::span<const int> perm) {
    double c = 0.0;
    for (size_t i = 0; i < x.size(); ++i) c += x[i] * y[perm[i]];
    return c;
}

bool cycle_bound_gap_premise(std::span<const double> x_desc,
                        std::span<const double> y_asc) {
    const int n = static_cast<int>(x_desc.size());
    // 1-based indices i in [2, n-1], j, j' in [1, i], (j, j') != (i, i).
    for (int i = 2; i <= n - 1; ++i) {
        const double base =
            (x_desc[i - 1] - x_desc[i]) * (y_asc[i] - y_asc[i - 1]);
        for (int j = 1; j <= i; ++j)
            for (int jp = 1; jp <= i; ++jp) {
                if (j == i && jp == i) continue;
                const double cross =
                    (x_desc[j - 1] - x_desc[i]) * (y_asc[i] - y_asc[jp - 1]);
                if (cross - base < 1.0) return false;
            }
    }
    return true;
}

double cycle_cost_lower_bound(std::span<const double> x_desc, std::span<const double> y_asc,
                    bool include_gap_term) {
    const int n = static_cast<int>(x_desc.size());
    if (n == 0) return 0.0;
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound += x_desc[i] * y_asc[i];
    if (n == 1) return bound;  // trivial factor
    for (int i = 0; i + 1 < n; ++i)
        bound += (x_desc[i] - x_desc[i + 1]) * (y_asc[i + 1] - y_asc[i]);
    if (include_gap_term) bound += n - 2;
    return bound;
}

}  // namespace balloon
