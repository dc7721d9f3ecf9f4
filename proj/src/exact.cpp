#include "balloon/exact.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace balloon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void sort_entries(std::vector<SortedWedgeView::Entry>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.child != b.child) return a.child < b.child;
        return a.side < b.side;
    });
}

}  // namespace

SortedWedgeView sorted_wedge_sums(const StarInstance& star) {
    SortedWedgeView v;
    for (int c = 0; c < star.n(); ++c)
        v.ascending.push_back({star.children[c].sum(), c, -1});
    sort_entries(v.ascending);
    return v;
}

SortedWedgeView sorted_sub_wedges(const StarInstance& star) {
    SortedWedgeView v;
    for (int c = 0; c < star.n(); ++c) {
        v.ascending.push_back({star.wedge(c, 0), c, 0});
        v.ascending.push_back({star.wedge(c, 1), c, 1});
    }
    sort_entries(v.ascending);
    return v;
}

Solution solve_de1(const StarInstance& star) {
    validate_star(star);
    if (!star.all_even())
        throw InvalidArgumentError("zigzag solver needs even sub-wedge pairs");
    const int n = star.n();
    const SortedWedgeView view = sorted_wedge_sums(star);
    const int k = n / 2;

    std::deque<int> seq;
    if (k >= 1) {
        seq.push_back(view.m(1).child);
        seq.push_back(view.M(1).child);
        for (int i = 2; i <= k; ++i) {
            if (i % 2 == 0) {
                seq.push_front(view.M(i).child);
                seq.push_back(view.m(i).child);
            } else {
                seq.push_front(view.m(i).child);
                seq.push_back(view.M(i).child);
            }
        }
    }
    if (n % 2 == 1) seq.push_back(view.mid().child);

    CircularOrdering sigma;
    sigma.order.assign(seq.begin(), seq.end());
    FlipAssignment t = FlipAssignment::zeros(n);
    canonicalize(CaseTag::C1, sigma, t);
    return Solution::make(star, std::move(sigma), std::move(t), "de1-zigzag",
                          true);
}

Solution solve_re2(const StarInstance& star) {
    validate_star(star);
    const int n = star.n();
    if (n == 1)
        return Solution::make(star, CircularOrdering::identity(1),
                              FlipAssignment::zeros(1), "re2-dp", true);

    auto w = [&](int c, int s) { return star.wedge(c, s); };

    // f[t0][ti]: best min angle among children 0..i, given the boundary flips.
    double f[2][2], nf[2][2];
    std::vector<std::array<std::uint8_t, 4>> choice(n);
    for (int t0 = 0; t0 < 2; ++t0)
        for (int t1 = 0; t1 < 2; ++t1) f[t0][t1] = w(0, 1 - t0) + w(1, t1);
    for (int i = 2; i < n; ++i) {
        for (int t0 = 0; t0 < 2; ++t0)
            for (int ti = 0; ti < 2; ++ti) {
                double best = -kInf;
                int arg = 0;
                for (int tp = 0; tp < 2; ++tp) {
                    const double cand =
                        std::min(f[t0][tp], w(i - 1, 1 - tp) + w(i, ti));
                    if (cand > best) {
                        best = cand;
                        arg = tp;
                    }
                }
                nf[t0][ti] = best;
                choice[i][t0 * 2 + ti] = static_cast<std::uint8_t>(arg);
            }
        std::copy(&nf[0][0], &nf[0][0] + 4, &f[0][0]);
    }

    double best = -kInf;
    int best_t0 = 0, best_tl = 0;
    for (int t0 = 0; t0 < 2; ++t0)
        for (int tl = 0; tl < 2; ++tl) {
            const double cand = std::min(f[t0][tl], w(n - 1, 1 - tl) + w(0, t0));
            if (cand > best) {
                best = cand;
                best_t0 = t0;
                best_tl = tl;
            }
        }

    FlipAssignment t = FlipAssignment::zeros(n);
    t.bits[0] = static_cast<std::uint8_t>(best_t0);
    t.bits[n - 1] = static_cast<std::uint8_t>(best_tl);
    for (int i = n - 1; i >= 2; --i)
        t.bits[i - 1] = choice[i][best_t0 * 2 + t.bits[i]];
    return Solution::make(star, CircularOrdering::identity(n), std::move(t),
                          "re2-dp", true);
}

Solution solve_de2(const StarInstance& star) {
    validate_star(star);
    const int n = star.n();
    if (n == 1)
        return Solution::make(star, CircularOrdering::identity(1),
                              FlipAssignment::zeros(1), "de2-dp", true);

    auto w = [&](int c, int s) { return star.wedge(c, s); };

    // g[t0][ti]: min sum of adjacent products among children 0..i.
    double g[2][2], ng[2][2];
    std::vector<std::array<std::uint8_t, 4>> choice(n);
    for (int t0 = 0; t0 < 2; ++t0)
        for (int t1 = 0; t1 < 2; ++t1) g[t0][t1] = w(0, 1 - t0) * w(1, t1);
    for (int i = 2; i < n; ++i) {
        for (int t0 = 0; t0 < 2; ++t0)
            for (int ti = 0; ti < 2; ++ti) {
                double best = kInf;
                int arg = 0;
                for (int tp = 0; tp < 2; ++tp) {
                    const double cand = g[t0][tp] + w(i - 1, 1 - tp) * w(i, ti);
                    if (cand < best) {
                        best = cand;
                        arg = tp;
                    }
                }
                ng[t0][ti] = best;
                choice[i][t0 * 2 + ti] = static_cast<std::uint8_t>(arg);
            }
        std::copy(&ng[0][0], &ng[0][0] + 4, &g[0][0]);
    }

    double best = kInf;
    int best_t0 = 0, best_tl = 0;
    for (int t0 = 0; t0 < 2; ++t0)
        for (int tl = 0; tl < 2; ++tl) {
            const double cand = g[t0][tl] + w(n - 1, 1 - tl) * w(0, t0);
            if (cand < best) {
                best = cand;
                best_t0 = t0;
                best_tl = tl;
            }
        }

    FlipAssignment t = FlipAssignment::zeros(n);
    t.bits[0] = static_cast<std::uint8_t>(best_t0);
    t.bits[n - 1] = static_cast<std::uint8_t>(best_tl);
    for (int i = n - 1; i >= 2; --i)
        t.bits[i - 1] = choice[i][best_t0 * 2 + t.bits[i]];
    return Solution::make(star, CircularOrdering::identity(n), std::move(t),
                          "de2-dp", true);
}

Solution solve_ra2(const StarInstance& star) {
    validate_star(star);
    const int n = star.n();
    if (n == 1)
        return Solution::make(star, CircularOrdering::identity(1),
                              FlipAssignment::zeros(1), "ra2-dp", true);

    auto w = [&](int c, int s) { return star.wedge(c, s); };
    const double slack = 1e-12;

    double best_ratio = kInf;
    bool have = false;
    FlipAssignment best_t;

    // Candidate largest angle: side a of child i against side b of child i+1.
    std::vector<std::uint8_t> tb(n);
    std::vector<std::array<std::uint8_t, 2>> choice(n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const double cap = w(i, a) + w(j, b);
                // Chain j, j+1, ..., i with both end flips pinned; maximize
                // the minimum angle subject to every angle <= cap.
                const int t_first = b;      // flip of child j
                const int t_last = 1 - a;   // flip of child i
                double f[2];
                f[t_first] = kInf;
                f[1 - t_first] = -kInf;
                bool dead = false;
                for (int step = 1; step < n && !dead; ++step) {
                    const int prev = (j + step - 1) % n;
                    const int cur = (j + step) % n;
                    double nf[2] = {-kInf, -kInf};
                    for (int tc = 0; tc < 2; ++tc) {
                        if (cur == i && tc != t_last) continue;
                        double best = -kInf;
                        int arg = 0;
                        for (int tp = 0; tp < 2; ++tp) {
                            const double ang = w(prev, 1 - tp) + w(cur, tc);
                            if (ang > cap + slack) continue;
                            const double cand = std::min(f[tp], ang);
                            if (cand > best) {
                                best = cand;
                                arg = tp;
                            }
                        }
                        nf[tc] = best;
                        choice[cur][tc] = static_cast<std::uint8_t>(arg);
                    }
                    f[0] = nf[0];
                    f[1] = nf[1];
                    if (f[0] == -kInf && f[1] == -kInf) dead = true;
                }
                if (dead || f[t_last] == -kInf) continue;
                const double fmin = std::min(f[t_last], cap);
                const double ratio = fmin > 0.0 ? cap / fmin : kInf;
                if (!have || ratio < best_ratio) {
                    have = true;
                    best_ratio = ratio;
                    tb[i] = static_cast<std::uint8_t>(t_last);
                    // backtrack along the chain
                    int cur_bit = t_last;
                    for (int step = n - 1; step >= 1; --step) {
                        const int cur = (j + step) % n;
                        const int prev = (j + step - 1) % n;
                        const int tp = choice[cur][cur_bit];
                        tb[cur] = static_cast<std::uint8_t>(cur_bit);
                        tb[prev] = static_cast<std::uint8_t>(tp);
                        cur_bit = tp;
                    }
                    best_t.bits = tb;
                }
            }
    }

    if (!have)
        throw DegenerateInstanceError("aspect-ratio DP found no feasible flip");
    return Solution::make(star, CircularOrdering::identity(n),
                          std::move(best_t), "ra2-dp", true);
}

Solution solve_re3_re4(const StarInstance& star) {
    validate_star(star);
    BipartiteModel model = make_bipartite_model(star, CostRule::Sum);
    Matching N = merge_cycles_matching(model);
    auto [sigma, t] = decode_matching(model, N);
    canonicalize(star.case_tag, sigma, t);
    return Solution::make(star, std::move(sigma), std::move(t),
                          "re-cycle-merge", true);
}

}  // namespace balloon
