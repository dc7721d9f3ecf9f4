#include <doctest.h>

#include <cmath>

#include "balloon/driver.hpp"
#include "balloon/layout.hpp"
#include "testutil.hpp"

using namespace balloon;
using namespace balloon::testutil;

namespace {

RootedTree star_tree(int leaves) {
    RootedTree t;
    t.nodes.push_back({"root", -1, {}, ""});
    t.root = 0;
    for (int i = 0; i < leaves; ++i) {
        t.nodes.push_back({"l" + std::to_string(i), 0, {}, ""});
        t.nodes[0].children.push_back(i + 1);
    }
    return t;
}

RootedTree path_tree(int depth) {
    RootedTree t;
    t.nodes.push_back({"p0", -1, {}, ""});
    t.root = 0;
    for (int i = 1; i <= depth; ++i) {
        t.nodes.push_back({"p" + std::to_string(i), i - 1, {}, ""});
        t.nodes[i - 1].children.push_back(i);
    }
    return t;
}

RootedTree full_binary(int depth) {
    RootedTree t;
    t.nodes.push_back({"b0", -1, {}, ""});
    t.root = 0;
    std::vector<int> frontier{0};
    int next_id = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next;
        for (int v : frontier)
            for (int k = 0; k < 2; ++k) {
                t.nodes.push_back({"b" + std::to_string(next_id), v, {}, ""});
                t.nodes[v].children.push_back(next_id);
                next.push_back(next_id);
                ++next_id;
            }
        frontier = std::move(next);
    }
    return t;
}

double dist(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void check_sns_invariants(const RootedTree& tree, const TreeLayout& layout) {
    for (int v = 0; v < tree.size(); ++v) {
        if (tree.is_leaf(v)) continue;
        const auto& star = layout.stars[v];
        REQUIRE(star.has_value());
        double total = 0.0;
        for (const auto& c : star->children) total += c.sum();
        CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-9));
        CHECK(layout.nodes[v].free_arc >= -1e-12);

        // children sit on the inner circle; sibling circles stay disjoint
        const auto& kids = tree.nodes[v].children;
        for (int c : kids)
            CHECK(dist(layout.nodes[c].position, layout.nodes[v].position) ==
                  doctest::Approx(layout.nodes[v].inner_radius).epsilon(1e-9));
        for (size_t i = 0; i < kids.size(); ++i)
            for (size_t j = i + 1; j < kids.size(); ++j) {
                const double d = dist(layout.nodes[kids[i]].position,
                                      layout.nodes[kids[j]].position);
                CHECK(d >= layout.nodes[kids[i]].outer_radius +
                               layout.nodes[kids[j]].outer_radius - 1e-6);
            }
    }
}

}  // namespace

TEST_CASE("single leaf lays out with the default radius") {
    const RootedTree t = star_tree(0);
    const TreeLayout layout = sns_layout(t);
    CHECK(layout.nodes[0].outer_radius == doctest::Approx(1.0));
}

TEST_CASE("identical leaves spread evenly") {
    for (int k : {2, 3, 4, 6}) {
        const RootedTree t = star_tree(k);
        TreeLayout layout = sns_layout(t);
        const auto& star = layout.stars[0];
        REQUIRE(star.has_value());
        const auto theta = angle_sequence(*star, CircularOrdering::identity(k),
                                          FlipAssignment::zeros(k));
        for (double a : theta) CHECK(a == doctest::Approx(kTwoPi / k).epsilon(1e-12));

        layout = realize(t, std::move(layout), {}, true);
        check_sns_invariants(t, layout);
    }
}

TEST_CASE("wedge angles stay proportional to child extents plus the free arc") {
    RootedTree t = star_tree(3);
    // make leaf 2 twice as large by giving it two children of its own
    for (int j = 0; j < 2; ++j) {
        const int id = t.size();
        t.nodes.push_back({"x" + std::to_string(j), 3, {}, ""});
        t.nodes[3].children.push_back(id);
    }
    const TreeLayout layout = sns_layout(t);
    const auto& star = layout.stars[0];
    REQUIRE(star.has_value());
    const double r = layout.nodes[0].inner_radius;
    const double fa = layout.nodes[0].free_arc;
    const double r1 = layout.nodes[1].outer_radius;
    const double r3 = layout.nodes[3].outer_radius;
    CHECK(r3 > r1);
    const auto theta = angle_sequence(*star, CircularOrdering::identity(3),
                                      FlipAssignment::zeros(3));
    CHECK(theta[0] == doctest::Approx((r1 + fa + r1) / r).epsilon(1e-9));
    CHECK(theta[1] == doctest::Approx((r1 + fa + r3) / r).epsilon(1e-9));
    CHECK(theta[2] == doctest::Approx((r3 + fa + r1) / r).epsilon(1e-9));
}

TEST_CASE("fractal layout: equal edge lengths per depth") {
    const RootedTree path = path_tree(4);
    TreeLayout layout = fractal_layout(path, {0.5, 1.0});
    layout = realize(path, std::move(layout), {}, true);
    for (int d = 1; d <= 4; ++d)
        CHECK(layout.nodes[d].edge_length ==
              doctest::Approx(std::pow(0.5, d)).epsilon(1e-12));
    // total extent of the chain
    CHECK(dist(layout.nodes[4].position, layout.nodes[0].position) <=
          0.5 + 0.25 + 0.125 + 0.0625 + 1e-9);

    const RootedTree bin = full_binary(3);
    TreeLayout bl = fractal_layout(bin, {0.4, 1.0});
    bl = realize(bin, std::move(bl), {}, true);
    const auto depths = bin.depths();
    for (int v = 1; v < bin.size(); ++v) {
        if (depths[v] != 3) continue;
        CHECK(bl.nodes[v].edge_length == 0.4 * 0.4 * 0.4);
        CHECK(dist(bl.nodes[v].position, bl.nodes[bin.nodes[v].parent].position) ==
              doctest::Approx(bl.nodes[v].edge_length).epsilon(1e-12));
    }
}

TEST_CASE("shrink keeps coverage and evenness, removes free arcs") {
    // asymmetric star: the big child binds the radius, the small ones keep
    // slack that shrinking removes
    RootedTree t = star_tree(3);
    for (int j = 0; j < 2; ++j) {
        const int id = t.size();
        t.nodes.push_back({"x" + std::to_string(j), 3, {}, ""});
        t.nodes[3].children.push_back(id);
    }
    const TreeLayout layout = sns_layout(t);
    const StarInstance& even = *layout.stars[0];
    const auto minima = tight_sub_wedges(t, layout, 0);

    // tight circles: shrinking to the instance's own values changes nothing
    std::vector<SubWedgePair> loose(3);
    for (int i = 0; i < 3; ++i) loose[i] = even.children[i];
    const StarInstance same = shrink_to_uneven(even, loose);
    for (int i = 0; i < 3; ++i)
        CHECK(same.children[i].w0 == doctest::Approx(even.children[i].w0));

    const StarInstance shrunk = shrink_to_uneven(even, minima);
    CHECK(shrunk.all_even());  // even minima keep the instance even
    double before = even.total(), after = shrunk.total();
    CHECK(layout.nodes[0].free_arc > 0);
    CHECK(after < before - 1e-9);  // strict when free arcs existed
    for (int i = 0; i < 3; ++i) {
        CHECK(shrunk.children[i].w0 <= even.children[i].w0 + 1e-15);
        CHECK(shrunk.children[i].w0 >= minima[i].w0 - 1e-12);
    }
}

TEST_CASE("realize: canonical start angle and accumulation") {
    const RootedTree single = path_tree(1);
    TreeLayout layout = sns_layout(single);
    layout = realize(single, std::move(layout), {}, true);
    const double r = layout.nodes[0].inner_radius;
    CHECK(layout.nodes[1].position.x == doctest::Approx(r));
    CHECK(layout.nodes[1].position.y == doctest::Approx(0.0));

    const RootedTree four = star_tree(4);
    TreeLayout fl = realize(four, sns_layout(four), {}, true);
    for (int i = 1; i <= 4; ++i) {
        const double want = (i - 1) * kTwoPi / 4.0;
        CHECK(fl.nodes[i].ray_angle == doctest::Approx(want).epsilon(1e-9));
    }

    // missing solution raises when identities are not allowed
    CHECK_THROWS_AS(realize(four, sns_layout(four), {}, false),
                    InvalidArgumentError);
}

TEST_CASE("random trees keep the geometric invariants") {
    Rng rng(127);
    for (int rep = 0; rep < 25; ++rep) {
        const RootedTree t = random_tree(60, rng);
        TreeLayout layout = sns_layout(t);
        layout = realize(t, std::move(layout), {}, true);
        check_sns_invariants(t, layout);
    }
}

TEST_CASE("optimized trees keep per-node solutions consistent") {
    Rng rng(131);
    for (CaseTag tag : {CaseTag::C1, CaseTag::C2, CaseTag::C3, CaseTag::C4}) {
        const RootedTree t = random_tree(40, rng);
        OptimizeOptions opts;
        opts.case_tag = tag;
        opts.problem = Problem::RE;
        const TreeOptimizeResult res = optimize_tree(t, opts);
        for (const auto& node : res.per_node) {
            const MetricsReport again =
                compute_metrics(node.instance, node.outcome.solution.ordering,
                                node.outcome.solution.flips);
            CHECK(again.ang_resl ==
                  doctest::Approx(node.outcome.solution.metrics.ang_resl)
                      .epsilon(1e-9));
        }
        // every internal node got exactly one record
        int internals = 0;
        for (int v = 0; v < t.size(); ++v)
            if (!t.is_leaf(v)) ++internals;
        CHECK(static_cast<int>(res.per_node.size()) == internals);
    }
}

TEST_CASE("single-node and two-level trees") {
    const RootedTree single = star_tree(0);
    OptimizeOptions opts;
    const TreeOptimizeResult res = optimize_tree(single, opts);
    CHECK(res.per_node.empty());

    const RootedTree star = star_tree(4);
    const TreeOptimizeResult res4 = optimize_tree(star, opts);
    REQUIRE(res4.per_node.size() == 1);
    CHECK(res4.per_node[0].outcome.info.exact_used);
}
