#include "balloon/bipartite.hpp"

#include <algorithm>
#include <numeric>

namespace balloon {

namespace {

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

BipartiteModel make_bipartite_model(const StarInstance& star, CostRule rule) {
    validate_star(star);
    const int n = star.n();
    BipartiteModel m;
    m.case_tag = star.case_tag;
    m.rule = rule;
    m.n = n;
    m.rank_of_endpoint.assign(2 * n, -1);
    m.side_of_endpoint.assign(2 * n, '?');

    struct Item {
        double value;
        int endpoint;
    };
    std::vector<Item> vs, us;
    if (star.case_tag == CaseTag::C3 || star.case_tag == CaseTag::C2) {
        for (int c = 0; c < n; ++c) {
            vs.push_back({star.wedge(c, 0), 2 * c});
            us.push_back({star.wedge(c, 1), 2 * c + 1});
        }
    } else {
        std::vector<Item> all;
        all.reserve(2 * n);
        for (int c = 0; c < n; ++c) {
            all.push_back({star.wedge(c, 0), 2 * c});
            all.push_back({star.wedge(c, 1), 2 * c + 1});
        }
        std::stable_sort(all.begin(), all.end(), [](const Item& a, const Item& b) {
            return a.value < b.value;
        });
        us.assign(all.begin(), all.begin() + n);
        vs.assign(all.begin() + n, all.end());
    }

    std::stable_sort(vs.begin(), vs.end(),
                     [](const Item& a, const Item& b) { return a.value > b.value; });
    std::stable_sort(us.begin(), us.end(),
                     [](const Item& a, const Item& b) { return a.value < b.value; });

    for (int i = 0; i < n; ++i) {
        m.v_value.push_back(vs[i].value);
        m.v_endpoint.push_back(vs[i].endpoint);
        m.rank_of_endpoint[vs[i].endpoint] = i;
        m.side_of_endpoint[vs[i].endpoint] = 'V';
        m.u_value.push_back(us[i].value);
        m.u_endpoint.push_back(us[i].endpoint);
        m.rank_of_endpoint[us[i].endpoint] = i;
        m.side_of_endpoint[us[i].endpoint] = 'U';
    }
    return m;
}

std::vector<int> Matching::v_of_u() const {
    std::vector<int> inv(u_of_v.size(), -1);
    for (int v = 0; v < size(); ++v) inv[u_of_v[v]] = v;
    return inv;
}

Matching Matching::identity(int n) {
    Matching N;
    N.u_of_v.resize(n);
    std::iota(N.u_of_v.begin(), N.u_of_v.end(), 0);
    return N;
}

Matching default_matching(const BipartiteModel& model) {
    return Matching::identity(model.n);
}

double matching_cost(const BipartiteModel& model, const Matching& N) {
    double c = 0.0;
    for (int v = 0; v < N.size(); ++v) c += model.edge_cost(v, N.u_of_v[v]);
    return c;
}

double min_edge_cost(const BipartiteModel& model, const Matching& N) {
    double best = model.edge_cost(0, N.u_of_v[0]);
    for (int v = 1; v < N.size(); ++v)
        best = std::min(best, model.edge_cost(v, N.u_of_v[v]));
    return best;
}

Matching exchange(const Matching& N, std::pair<int, int> e1,
                  std::pair<int, int> e2) {
    const auto [va, ub] = e1;
    const auto [vc, ud] = e2;
    auto in_range = [&](int v, int u) {
        return v >= 0 && v < N.size() && u >= 0 && u < N.size();
    };
    if (!in_range(va, ub) || !in_range(vc, ud) || N.u_of_v[va] != ub ||
        N.u_of_v[vc] != ud)
        throw InvalidArgumentError("exchange: such an edge is not in the matching");
    if (va == vc)
        throw InvalidArgumentError("exchange needs two distinct edges");
    Matching out = N;
    out.u_of_v[va] = ud;
    out.u_of_v[vc] = ub;
    return out;
}

namespace {

// N-partner in the endpoint graph.
int n_partner(const BipartiteModel& m, const Matching& N,
              const std::vector<int>& vofu, int ep) {
    const int rank = m.rank_of_endpoint[ep];
    return m.side_of_endpoint[ep] == 'V' ? m.u_endpoint[N.u_of_v[rank]]
                                         : m.v_endpoint[vofu[rank]];
}

}  // namespace

SubcycleInfo subcycles(const BipartiteModel& model, const Matching& N) {
    const int total = 2 * model.n;
    SubcycleInfo info;
    info.cycle_of_endpoint.assign(total, -1);
    const std::vector<int> vofu = N.v_of_u();
    for (int start = 0; start < total; ++start) {
        if (info.cycle_of_endpoint[start] >= 0) continue;
        const int id = info.eta++;
        // walk alternating I0 / N edges until back at start
        int ep = start;
        bool via_i0 = true;
        do {
            info.cycle_of_endpoint[ep] = id;
            ep = via_i0 ? model.i0_partner(ep) : n_partner(model, N, vofu, ep);
            via_i0 = !via_i0;
        } while (ep != start);
    }
    return info;
}

bool is_hamiltonian(const BipartiteModel& model, const Matching& N) {
    return subcycles(model, N).eta == 1;
}

std::pair<CircularOrdering, FlipAssignment> decode_matching(
    const BipartiteModel& model, const Matching& N) {
    const int n = model.n;
    const std::vector<int> vofu = N.v_of_u();

    // Walks the Hamiltonian cycle: enter child 0 at `entry`, exit through the
    // I0 partner, hop to the next child's entry along N.
    auto walk = [&](int entry) {
        CircularOrdering sigma;
        FlipAssignment t = FlipAssignment::zeros(n);
        std::vector<char> seen(n, 0);
        int ep = entry;
        for (int step = 0; step < n; ++step) {
            const int child = model.endpoint_child(ep);
            if (seen[child])
                throw InvalidArgumentError(
                    "decode: I0 union N is not a single Hamiltonian cycle");
            seen[child] = 1;
            sigma.order.push_back(child);
            t.bits[child] = static_cast<std::uint8_t>(model.endpoint_side(ep));
            ep = n_partner(model, N, vofu, model.i0_partner(ep));
        }
        if (ep != entry)
            throw InvalidArgumentError(
                "decode: I0 union N is not a single Hamiltonian cycle");
        return std::make_pair(sigma, t);
    };

    if (model.case_tag == CaseTag::C3 || model.case_tag == CaseTag::C2) {
        // Given orientation: the first-met sub-wedge of every child is w0.
        auto [sigma, t] = walk(0);
        return {sigma, FlipAssignment::zeros(n)};
    }
    auto a = walk(0);
    auto b = walk(1);
    if (model.case_tag == CaseTag::C1) {
        a.second = FlipAssignment::zeros(n);
        b.second = FlipAssignment::zeros(n);
    }
    return lex_less(a.first, a.second, b.first, b.second) ? a : b;
}

Matching merge_cycles_matching(const BipartiteModel& model) {
    const int n = model.n;
    Matching N = Matching::identity(n);
    std::vector<int> vofu(n);
    std::iota(vofu.begin(), vofu.end(), 0);

    Dsu dsu(2 * n);
    for (int c = 0; c < n; ++c) dsu.unite(2 * c, 2 * c + 1);
    int components = n;
    for (int i = 0; i < n; ++i)
        if (dsu.unite(model.v_endpoint[i], model.u_endpoint[i])) --components;
    if (components == 1) return N;

    // Candidate angles: i-th smallest of U against (i+1)-th largest of V.
    std::vector<int> cand(std::max(0, n - 1));
    std::iota(cand.begin(), cand.end(), 0);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        const double ka = model.u_value[a] + model.v_value[a + 1];
        const double kb = model.u_value[b] + model.v_value[b + 1];
        if (ka != kb) return ka > kb;
        return a < b;
    });

    for (int j : cand) {
        const int eu = model.u_endpoint[j];
        const int ev = model.v_endpoint[j + 1];
        if (dsu.find(eu) == dsu.find(ev)) continue;
        const int pv = vofu[j];       // V currently matched to u-rank j
        const int pu = N.u_of_v[j + 1];  // U currently matched to v-rank j+1
        N.u_of_v[pv] = pu;
        vofu[pu] = pv;
        N.u_of_v[j + 1] = j;
        vofu[j] = j + 1;
        dsu.unite(eu, ev);
        if (--components == 1) break;
    }
    return N;
}

}  // namespace balloon
