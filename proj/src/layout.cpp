#include "balloon/layout.hpp"

#include <algorithm>
#include <cmath>

namespace balloon {

namespace {

// Smallest inner radius at which every child circle fits inside its even
// wedge. The fit predicate is monotone in r, so bisection applies.
double solve_inner_radius(std::span<const double> child_r) {
    const int n = static_cast<int>(child_r.size());
    double sum_r = 0.0, max_r = 0.0;
    for (double r : child_r) {
        sum_r += r;
        max_r = std::max(max_r, r);
    }
    if (sum_r == 0.0) return 0.0;

    auto fits = [&](double r) {
        if (r <= max_r) return false;
        const double free_arc = (kTwoPi * r - 2.0 * sum_r) / n;
        if (free_arc < 0.0) return false;
        for (double ri : child_r)
            if (std::asin(ri / r) > (ri + free_arc / 2.0) / r) return false;
        return true;
    };

    double lo = std::max(sum_r / kTwoPi * 2.0, max_r);
    double hi = std::max(lo, max_r) + sum_r;
    while (!fits(hi)) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (fits(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

TreeLayout sns_layout(const RootedTree& tree, const SnsParams& params) {
    validate_tree(tree);
    if (!(params.leaf_radius > 0.0))
        throw InvalidArgumentError("leaf radius must be positive");

    TreeLayout layout;
    layout.nodes.resize(tree.size());
    layout.stars.resize(tree.size());

    for (int v : tree.post_order()) {
        auto& ln = layout.nodes[v];
        if (tree.is_leaf(v)) {
            ln.inner_radius = 0.0;
            ln.outer_radius = params.leaf_radius;
            continue;
        }
        const auto& kids = tree.nodes[v].children;
        const int n = static_cast<int>(kids.size());
        std::vector<double> child_r(n);
        double sum_r = 0.0, max_r = 0.0;
        for (int i = 0; i < n; ++i) {
            child_r[i] = layout.nodes[kids[i]].outer_radius;
            sum_r += child_r[i];
            max_r = std::max(max_r, child_r[i]);
        }
        const double r = solve_inner_radius(child_r);
        ln.inner_radius = r;
        ln.free_arc = (kTwoPi * r - 2.0 * sum_r) / n;
        ln.outer_radius = r + max_r;

        StarInstance star;
        star.case_tag = CaseTag::C1;
        for (int i = 0; i < n; ++i) {
            const double w = (child_r[i] + ln.free_arc / 2.0) / r;
            star.children.push_back({w, w});
        }
        star.normalized = std::abs(star.total() - kTwoPi) <= kAngleTol;
        layout.stars[v] = std::move(star);
    }
    return layout;
}

TreeLayout fractal_layout(const RootedTree& tree, const FractalParams& params) {
    validate_tree(tree);
    if (!(params.gamma > 0.0) || !(params.gamma < 1.0))
        throw InvalidArgumentError("fractal ratio must lie strictly in (0,1)");
    if (!(params.root_radius > 0.0))
        throw InvalidArgumentError("root radius must be positive");

    TreeLayout layout;
    layout.nodes.resize(tree.size());
    layout.stars.resize(tree.size());

    const std::vector<int> depth = tree.depths();
    const int max_depth = *std::max_element(depth.begin(), depth.end());
    // one shared length per depth keeps same-depth edges exactly equal
    std::vector<double> len(max_depth + 1, params.root_radius);
    for (int d = 1; d <= max_depth; ++d) len[d] = len[d - 1] * params.gamma;

    // outer radii bottom-up: enough to enclose children circles
    for (int v : tree.post_order()) {
        auto& ln = layout.nodes[v];
        if (tree.is_leaf(v)) {
            ln.inner_radius = 0.0;
            ln.outer_radius = len[depth[v]] * params.gamma * 0.5;
            if (depth[v] == 0) ln.outer_radius = params.root_radius;
            continue;
        }
        ln.inner_radius = len[depth[v] + 1];
        double enclosing = ln.inner_radius;
        for (int c : tree.nodes[v].children)
            enclosing = std::max(enclosing,
                                 ln.inner_radius + layout.nodes[c].outer_radius);
        ln.outer_radius = enclosing;

        StarInstance star;
        star.case_tag = CaseTag::C1;
        const int n = static_cast<int>(tree.nodes[v].children.size());
        for (int i = 0; i < n; ++i)
            star.children.push_back({kTwoPi / (2.0 * n), kTwoPi / (2.0 * n)});
        star.normalized = true;
        layout.stars[v] = std::move(star);
    }
    return layout;
}

std::vector<SubWedgePair> tight_sub_wedges(const RootedTree& tree,
                                           const TreeLayout& layout, int node) {
    const auto& kids = tree.nodes[node].children;
    const double r = layout.nodes[node].inner_radius;
    std::vector<SubWedgePair> minima;
    minima.reserve(kids.size());
    for (int c : kids) {
        const double ratio = std::min(1.0, layout.nodes[c].outer_radius / r);
        const double tight = std::asin(ratio);
        minima.push_back({tight, tight});
    }
    return minima;
}

StarInstance shrink_to_uneven(const StarInstance& even_star,
                              std::span<const SubWedgePair> minima) {
    validate_star(even_star);
    if (!even_star.all_even())
        throw InvalidArgumentError("shrink expects an even instance");
    if (minima.size() != even_star.children.size())
        throw InvalidArgumentError("one minimum pair per child required");
    StarInstance out = even_star;
    for (size_t i = 0; i < minima.size(); ++i) {
        out.children[i].w0 = std::min(out.children[i].w0, minima[i].w0);
        out.children[i].w1 = std::min(out.children[i].w1, minima[i].w1);
    }
    out.normalized = std::abs(out.total() - kTwoPi) <= kAngleTol;
    return out;
}

TreeLayout realize(const RootedTree& tree, TreeLayout layout,
                   const std::map<int, Solution>& solutions,
                   bool allow_identity) {
    validate_tree(tree);
    layout.nodes[tree.root].position = {0.0, 0.0};
    layout.nodes[tree.root].ray_angle = 0.0;

    // parents before children: reversed post-order works
    std::vector<int> order = tree.post_order();
    std::reverse(order.begin(), order.end());
    for (int v : order) {
        if (tree.is_leaf(v)) continue;
        const auto& kids = tree.nodes[v].children;
        const int n = static_cast<int>(kids.size());

        const Solution* sol = nullptr;
        if (auto it = solutions.find(v); it != solutions.end()) sol = &it->second;
        if (!sol && !allow_identity)
            throw InvalidArgumentError("no solution for internal node '" +
                                       tree.nodes[v].id + "'");

        CircularOrdering sigma =
            sol ? sol->ordering : CircularOrdering::identity(n);
        FlipAssignment flips = sol ? sol->flips : FlipAssignment::zeros(n);
        const StarInstance* star = nullptr;
        if (layout.stars[v]) star = &*layout.stars[v];
        if (!star)
            throw InvalidArgumentError("no star geometry for internal node '" +
                                       tree.nodes[v].id + "'");

        const auto& parent_ln = layout.nodes[v];
        const double base = parent_ln.ray_angle;
        const double r = parent_ln.inner_radius;
        const std::vector<double> theta = angle_sequence(*star, sigma, flips);

        double ray = 0.0;  // local angle of the currently drawn child
        for (int p = 0; p < n; ++p) {
            const int local = sigma.at(p);
            const int child = kids[local];
            auto& cl = layout.nodes[child];
            cl.ray_angle = base + ray;
            cl.edge_length = r;
            cl.position = {parent_ln.position.x + r * std::cos(cl.ray_angle),
                           parent_ln.position.y + r * std::sin(cl.ray_angle)};
            const double first = star->wedge(local, flips.bit(local));
            const double second = star->wedge(local, flips.flipped(local));
            cl.wedge_start = cl.ray_angle - first;
            cl.wedge_end = cl.ray_angle + second;
            ray += theta[p];
        }
    }
    layout.positioned = true;
    return layout;
}

}  // namespace balloon
