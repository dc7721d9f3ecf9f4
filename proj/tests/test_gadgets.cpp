#include <doctest.h>

#include <algorithm>

#include "balloon/approx.hpp"
#include "balloon/exact.hpp"
#include "balloon/gadgets.hpp"
#include "balloon/oracle.hpp"
#include "testutil.hpp"

using namespace balloon;
using namespace balloon::testutil;

namespace {

TwoStationInstance four_jobs() {
    TwoStationInstance tsi;
    tsi.jobs = {{2, 3}, {1, 7}, {6, 2}, {4, 2}};
    tsi.lb = 3;
    tsi.ub = 11;
    return tsi;
}

CubicGraph k4() {
    return CubicGraph::from_edges(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33() {
    return CubicGraph::from_edges(6, {{0, 3}, {0, 4}, {0, 5},
                                      {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("two-station reduction: the four-job example") {
    const Ra4Gadget g = gen_ra4_from_2slw(four_jobs());
    const double rho = kTwoPi / 55.0;
    CHECK(g.rho == doctest::Approx(rho).epsilon(1e-12));
    CHECK(g.w_max == 7.0);
    CHECK(g.instance.children[0].w0 == doctest::Approx(2 * rho));
    CHECK(g.instance.children[0].w1 == doctest::Approx(10 * rho));
    CHECK(g.instance.children[1].w0 == doctest::Approx(1 * rho));
    CHECK(g.instance.children[1].w1 == doctest::Approx(14 * rho));
    CHECK(g.instance.children[2].w0 == doctest::Approx(6 * rho));
    CHECK(g.instance.children[2].w1 == doctest::Approx(9 * rho));
    CHECK(g.instance.children[3].w0 == doctest::Approx(4 * rho));
    CHECK(g.instance.children[3].w1 == doctest::Approx(9 * rho));
    CHECK(g.angle_lo == doctest::Approx(10 * rho));
    CHECK(g.angle_hi == doctest::Approx(18 * rho));
    CHECK(g.instance.normalized);
    CHECK(g.instance.total() == doctest::Approx(kTwoPi).epsilon(1e-12));

    // the feasible order 3,2,4,1 maps to a drawing inside the band
    const CircularOrdering sigma = sigma1({3, 2, 4, 1});
    const MetricsReport m =
        compute_metrics(g.instance, sigma, FlipAssignment::zeros(4));
    for (double a : m.angles) {
        CHECK(a >= g.angle_lo - 1e-12);
        CHECK(a <= g.angle_hi + 1e-12);
    }

    // every large sub-wedge dominates every small one
    for (const auto& ci : g.instance.children)
        for (const auto& cj : g.instance.children) CHECK(ci.w1 >= cj.w0);
}

TEST_CASE("two-station reduction: single job and degenerate input") {
    TwoStationInstance one;
    one.jobs = {{3, 4}};
    one.lb = 6;
    one.ub = 8;
    const Ra4Gadget g = gen_ra4_from_2slw(one);
    const MetricsReport m = compute_metrics(
        g.instance, CircularOrdering::identity(1), FlipAssignment::zeros(1));
    CHECK(m.angles[0] >= g.angle_lo - 1e-12);
    CHECK(m.angles[0] <= g.angle_hi + 1e-12);

    TwoStationInstance zero;
    zero.jobs = {{0, 0}};
    CHECK_THROWS_AS(gen_ra4_from_2slw(zero), DegenerateInstanceError);
}

TEST_CASE("two-station feasibility transfers through the reduction both ways") {
    Rng rng(113);
    for (int rep = 0; rep < 40; ++rep) {
        TwoStationInstance tsi;
        const int n = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i)
            tsi.jobs.push_back({double(rng() % 8), double(rng() % 8)});
        tsi.lb = double(rng() % 6);
        tsi.ub = tsi.lb + double(rng() % 8);

        // direct side: enumerate circular job orders
        bool feasible = false;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            if (perm[0] != 0) break;  // circular: fix the first job
            if (two_station_feasible(tsi, perm)) feasible = true;
        } while (!feasible && std::next_permutation(perm.begin(), perm.end()));

        const Ra4Gadget g = gen_ra4_from_2slw(tsi);
        const DecisionResult mapped =
            decide_angle_range(g.instance, g.angle_lo, g.angle_hi);
        CHECK(mapped.yes == feasible);
    }
}

TEST_CASE("cubic graph validation") {
    CHECK_THROWS_AS(CubicGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),
                    InvalidArgumentError);
    CHECK_THROWS_AS(
        CubicGraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}),
        InvalidArgumentError);
    const CubicGraph g = k4();
    CHECK(g.adjacent(0, 3));
}

TEST_CASE("block values for the complete graph on four nodes") {
    const De4Gadget g = gen_de4_from_cubic(k4());
    CHECK(g.instance.n() == 28);
    CHECK(g.upper[0] ==
          std::array<long long, 7>{324, 322, 321, 320, 318, 316, 315});
    CHECK(g.lower[0] == std::array<long long, 7>{36, 37, 38, 39, 41, 43, 45});
    CHECK(block_consecutive_products(g, 0) ==
          std::array<long long, 6>{2, 1, 1, 4, 4, 2});
    for (int b = 1; b < 4; ++b)
        CHECK(block_consecutive_products(g, b) ==
              std::array<long long, 6>{2, 1, 1, 4, 4, 2});

    // gap premise of the strengthened permutation bound holds per block
    for (int b = 0; b < 4; ++b) {
        std::vector<double> x(g.upper[b].begin(), g.upper[b].end());
        std::vector<double> y(g.lower[b].begin(), g.lower[b].end());
        CHECK(cycle_bound_gap_premise(x, y));
    }
}

TEST_CASE("sorted labels coincide with block-slot order") {
    for (const CubicGraph& graph : {k4(), k33()}) {
        const De4Gadget g = gen_de4_from_cubic(graph);
        const SortedWedgeView view = sorted_sub_wedges(g.instance);
        const int total = 7 * g.blocks();
        for (int r = 0; r < total; ++r) {
            // (r+1)-th maximum lives in block r/7 at slot r%7
            CHECK(view.M(r + 1).value ==
                  doctest::Approx(double(g.upper[r / 7][r % 7])));
            CHECK(view.m(r + 1).value ==
                  doctest::Approx(double(g.lower[r / 7][r % 7])));
        }
    }
}

TEST_CASE("vertical matching decomposes into 3n+1 subcycles") {
    for (const CubicGraph& graph : {k4(), k33()}) {
        const De4Gadget g = gen_de4_from_cubic(graph);
        const ChcReport rep = verify_chc(g, gadget_vertical_matching(g));
        CHECK(rep.eta == 3 * g.blocks() + 1);
        CHECK(rep.violations.empty());
        for (long long d : rep.block_delta) CHECK(d == 0);
    }
}

TEST_CASE("a Hamiltonian cycle yields a complementary cycle at exactly the budget") {
    struct Case {
        CubicGraph graph;
        std::vector<int> hc;
    };
    for (const Case& c : {Case{k4(), {0, 1, 2, 3}}, Case{k33(), {0, 3, 1, 4, 2, 5}}}) {
        const De4Gadget g = gen_de4_from_cubic(c.graph);
        const GadgetMatching n = hc_to_transition_matching(g, c.hc);
        const ChcReport rep = verify_chc(g, n);
        CHECK(rep.eta == 1);
        CHECK(rep.violations.empty());
        CHECK(rep.is_chc);
        CHECK(rep.cost == g.ub);
        for (long long d : rep.block_delta) CHECK(d == 7);
    }
}

TEST_CASE("invalid cycles are rejected") {
    const De4Gadget g = gen_de4_from_cubic(k33());
    CHECK_THROWS_AS(hc_to_transition_matching(g, {0, 1, 2, 3, 4, 5}),
                    InvalidArgumentError);  // 0-1 not an edge in K33
    CHECK_THROWS_AS(hc_to_transition_matching(g, {0, 3, 1, 4, 2}),
                    InvalidArgumentError);  // too short
}

TEST_CASE("planted defects are flagged") {
    const De4Gadget g = gen_de4_from_cubic(k4());
    GadgetMatching n = hc_to_transition_matching(g, {0, 1, 2, 3});

    // cross-block edge: swap the partners of the first edges of two blocks
    GadgetMatching bad = n;
    int e1 = -1, e2 = -1;
    for (size_t i = 0; i < bad.edges.size(); ++i) {
        const int blk = GadgetEndpointId::block(bad.edges[i].first);
        if (blk == 0 && e1 < 0) e1 = static_cast<int>(i);
        if (blk == 1 && e2 < 0) e2 = static_cast<int>(i);
    }
    std::swap(bad.edges[e1].second, bad.edges[e2].second);
    const ChcReport rep = verify_chc(g, bad);
    CHECK(!rep.violations.empty());
    CHECK(!rep.is_chc);

    // cross-side edge
    GadgetMatching sideways = n;
    auto& [a1, b1] = sideways.edges[0];
    auto& [a2, b2] = sideways.edges[1];
    std::swap(b1, a2);  // now one edge joins two uppers, another two lowers
    const ChcReport rep2 = verify_chc(g, sideways);
    CHECK(!rep2.violations.empty());
}

TEST_CASE("city matching partitions into its three families") {
    const De4Gadget g = gen_de4_from_cubic(k33());
    const int n = g.blocks();
    int b = 0, v = 0, lam = 0;
    std::vector<char> covered(14 * n, 0);
    for (int k = 0; k < g.instance.n(); ++k) {
        switch (g.city_kind(k)) {
            case CityKind::BPair: ++b; break;
            case CityKind::VTriple: ++v; break;
            case CityKind::LambdaChain: ++lam; break;
        }
        const auto [x, y] = g.city_edges[k];
        CHECK(!covered[x]);
        CHECK(!covered[y]);
        covered[x] = covered[y] = 1;
    }
    CHECK(b == 2 * n);
    CHECK(v == 3 * n);
    CHECK(lam == 2 * n);
    CHECK(std::count(covered.begin(), covered.end(), 0) == 0);  // perfect

    // b-pairs are vertical and slot roles line up with the constants
    for (int k = 0; k < 2 * n; ++k) {
        const auto [x, y] = g.city_edges[k];
        CHECK(GadgetEndpointId::block(x) == GadgetEndpointId::block(y));
        CHECK(GadgetEndpointId::slot(x) == GadgetEndpointId::slot(y));
        const int slot = GadgetEndpointId::slot(x);
        CHECK((slot == kBSlots[0] || slot == kBSlots[1]));
    }
}

TEST_CASE("mapped four-job band is certified feasible by the oracle") {
    const Ra4Gadget g = gen_ra4_from_2slw(four_jobs());
    const DecisionResult yes =
        decide_angle_range(g.instance, g.angle_lo, g.angle_hi);
    CHECK(yes.yes);
    REQUIRE(yes.witness.has_value());
    for (double a : yes.witness->metrics.angles) {
        CHECK(a >= g.angle_lo - 1e-12);
        CHECK(a <= g.angle_hi + 1e-12);
    }
}

TEST_CASE("gadget instances serialize with provenance-free star content") {
    const De4Gadget g = gen_de4_from_cubic(k4());
    validate_star(g.instance);
    CHECK(g.instance.case_tag == CaseTag::C4);
    // integer values survive the double round-trip
    for (const auto& c : g.instance.children) {
        CHECK(c.w0 == std::floor(c.w0));
        CHECK(c.w1 == std::floor(c.w1));
    }
}
