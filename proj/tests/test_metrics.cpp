#include <doctest.h>

#include <cmath>

#include "balloon/metrics.hpp"
#include "testutil.hpp"

using namespace balloon;
using namespace balloon::testutil;

TEST_CASE("angle sequence on the four-job example") {
    const StarInstance star = four_job_star();
    const auto theta =
        angle_sequence(star, sigma1({3, 2, 4, 1}), FlipAssignment::zeros(4));
    REQUIRE(theta.size() == 4);
    CHECK(theta[0] == 3.0);
    CHECK(theta[1] == 11.0);
    CHECK(theta[2] == 4.0);
    CHECK(theta[3] == 9.0);
}

TEST_CASE("angle sequence: identical even children give equal angles") {
    StarInstance star;
    star.case_tag = CaseTag::C1;
    star.children = {{1.5, 1.5}, {1.5, 1.5}, {1.5, 1.5}};
    for (int mask = 0; mask < 8; ++mask) {
        FlipAssignment t = FlipAssignment::zeros(3);
        for (int c = 0; c < 3; ++c) t.bits[c] = (mask >> c) & 1;
        // C1 is flip-insensitive, so hand the instance over as C4 to allow t
        StarInstance c4 = star;
        c4.case_tag = CaseTag::C4;
        for (double a : angle_sequence(c4, sigma1({2, 1, 3}), t))
            CHECK(a == 3.0);
    }
}

TEST_CASE("angle sequence: hand-evaluated uneven example") {
    StarInstance star;
    star.case_tag = CaseTag::C3;
    star.children = {{1, 6}, {2, 5}, {3, 4}};
    const auto theta =
        angle_sequence(star, sigma1({1, 3, 2}), FlipAssignment::zeros(3));
    CHECK(theta[0] == 9.0);  // w1(1) + w0(3) = 6 + 3
    CHECK(theta[1] == 6.0);  // w1(3) + w0(2) = 4 + 2
    CHECK(theta[2] == 6.0);  // w1(2) + w0(1) = 5 + 1
}

TEST_CASE("angle sequence rejects bad arguments") {
    const StarInstance star = four_job_star();
    CHECK_THROWS_AS(
        angle_sequence(star, sigma1({1, 2, 3}), FlipAssignment::zeros(4)),
        InvalidArgumentError);
    CHECK_THROWS_AS(
        angle_sequence(star, sigma1({1, 2, 3, 3}), FlipAssignment::zeros(4)),
        InvalidArgumentError);
}

TEST_CASE("metrics on the four-job example") {
    const StarInstance star = four_job_star();
    const MetricsReport m =
        compute_metrics(star, sigma1({3, 2, 4, 1}), FlipAssignment::zeros(4));
    CHECK(m.ang_resl == 3.0);
    CHECK(m.asp_ratio == doctest::Approx(11.0 / 3.0).epsilon(1e-12));
    // mean 27/4, squares 9+121+16+81 = 227
    CHECK(m.std_dev ==
          doctest::Approx(std::sqrt(227.0 / 4.0 - 27.0 * 27.0 / 16.0))
              .epsilon(1e-12));
    CHECK(m.sop == doctest::Approx(2 * 1 + 7 * 4 + 2 * 2 + 3 * 6).epsilon(1e-12));
}

TEST_CASE("equal angles: unit ratio, zero deviation") {
    StarInstance star;
    star.case_tag = CaseTag::C1;
    star.children = {{2, 2}, {2, 2}};
    const MetricsReport m =
        compute_metrics(star, sigma1({1, 2}), FlipAssignment::zeros(2));
    CHECK(m.asp_ratio == 1.0);
    CHECK(m.std_dev == 0.0);
}

TEST_CASE("zero minimum angle reports a flagged infinite ratio") {
    StarInstance star;
    star.case_tag = CaseTag::C3;
    star.children = {{0, 0}, {0, 1}};
    const MetricsReport m =
        compute_metrics(star, sigma1({1, 2}), FlipAssignment::zeros(2));
    CHECK(m.asp_ratio_infinite);
    CHECK(std::isinf(m.asp_ratio));
}

TEST_CASE("degenerate sizes one and two") {
    StarInstance one;
    one.case_tag = CaseTag::C4;
    one.children = {{0.5, 1.5}};
    const MetricsReport m1 =
        compute_metrics(one, sigma1({1}), FlipAssignment::zeros(1));
    REQUIRE(m1.angles.size() == 1);
    CHECK(m1.angles[0] == 2.0);
    CHECK(m1.std_dev == 0.0);

    StarInstance two;
    two.case_tag = CaseTag::C4;
    two.children = {{1, 2}, {4, 8}};
    FlipAssignment t = FlipAssignment::zeros(2);
    t.bits[1] = 1;
    const auto theta = angle_sequence(two, sigma1({1, 2}), t);
    // theta_1 = w1(1) + w1(2) (child 2 flipped), theta_2 = w0(2) + w0(1)
    CHECK(theta[0] == 2.0 + 8.0);
    CHECK(theta[1] == 4.0 + 1.0);
}

TEST_CASE("angle sum, rotation and reflection invariance") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const StarInstance star = random_star(CaseTag::C4, n, rng);
        CircularOrdering sigma = CircularOrdering::identity(n);
        std::shuffle(sigma.order.begin(), sigma.order.end(), rng);
        FlipAssignment t = FlipAssignment::zeros(n);
        for (int c = 0; c < n; ++c) t.bits[c] = rng() & 1;

        const MetricsReport m = compute_metrics(star, sigma, t);
        double sum = 0.0;
        for (double a : m.angles) sum += a;
        CHECK(sum == doctest::Approx(star.total()).epsilon(1e-12));

        // rotation
        CircularOrdering rot = sigma;
        std::rotate(rot.order.begin(), rot.order.begin() + 1, rot.order.end());
        const MetricsReport mr = compute_metrics(star, rot, t);
        CHECK(mr.ang_resl == doctest::Approx(m.ang_resl).epsilon(1e-12));
        CHECK(mr.std_dev == doctest::Approx(m.std_dev).epsilon(1e-12));
        CHECK(mr.sop == doctest::Approx(m.sop).epsilon(1e-12));

        // reflection with complemented flips
        CircularOrdering refl = sigma;
        std::reverse(refl.order.begin(), refl.order.end());
        FlipAssignment tc = t;
        for (auto& b : tc.bits) b = 1 - b;
        const MetricsReport mf = compute_metrics(star, refl, tc);
        CHECK(mf.ang_resl == doctest::Approx(m.ang_resl).epsilon(1e-12));
        CHECK(mf.std_dev == doctest::Approx(m.std_dev).epsilon(1e-12));
        CHECK(mf.sop == doctest::Approx(m.sop).epsilon(1e-12));
    }
}

TEST_CASE("definition and expansion identities") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const StarInstance star = random_star(CaseTag::C4, n, rng);
        CircularOrdering sigma = CircularOrdering::identity(n);
        std::shuffle(sigma.order.begin(), sigma.order.end(), rng);
        FlipAssignment t = FlipAssignment::zeros(n);
        for (int c = 0; c < n; ++c) t.bits[c] = rng() & 1;
        const MetricsReport m = compute_metrics(star, sigma, t);

        double sum = 0.0, sum_sq = 0.0;
        for (double a : m.angles) {
            sum += a;
            sum_sq += a * a;
        }
        // variance identity
        CHECK(m.std_dev * m.std_dev * n + sum * sum / n ==
              doctest::Approx(sum_sq).epsilon(1e-9));

        // expansion into per-child squares + twice the product sum
        double sq = 0.0;
        for (const auto& c : star.children) sq += c.w0 * c.w0 + c.w1 * c.w1;
        const double mean = sum / n;
        CHECK(m.std_dev * m.std_dev ==
              doctest::Approx(sq / n + 2.0 * m.sop / n - mean * mean)
                  .epsilon(1e-9));
        // on normalized instances the mean term is (2*pi/n)^2
        CHECK(mean == doctest::Approx(kTwoPi / n).epsilon(1e-9));
    }
}

TEST_CASE("canonicalization is idempotent and metric-preserving") {
    Rng rng(13);
    for (CaseTag tag : {CaseTag::C1, CaseTag::C3, CaseTag::C4}) {
        for (int rep = 0; rep < 30; ++rep) {
            const int n = 1 + static_cast<int>(rng() % 6);
            const StarInstance star = random_star(tag, n, rng);
            CircularOrdering sigma = CircularOrdering::identity(n);
            std::shuffle(sigma.order.begin(), sigma.order.end(), rng);
            FlipAssignment t = FlipAssignment::zeros(n);
            if (tag == CaseTag::C4)
                for (int c = 0; c < n; ++c) t.bits[c] = rng() & 1;
            const MetricsReport before = compute_metrics(star, sigma, t);

            canonicalize(tag, sigma, t);
            CHECK(sigma.order[0] == 0);
            const MetricsReport after = compute_metrics(star, sigma, t);
            CHECK(after.ang_resl == doctest::Approx(before.ang_resl).epsilon(1e-12));
            CHECK(after.sop == doctest::Approx(before.sop).epsilon(1e-12));

            CircularOrdering sigma2 = sigma;
            FlipAssignment t2 = t;
            canonicalize(tag, sigma2, t2);
            CHECK(sigma2.order == sigma.order);
            CHECK(t2.bits == t.bits);
        }
    }
}

TEST_CASE("normalize scales to a full circle and is idempotent") {
    StarInstance star;
    star.case_tag = CaseTag::C1;
    star.children = {{1, 1}, {1, 1}};
    const StarInstance norm = normalize(star);
    CHECK(norm.children[0].w0 == doctest::Approx(kTwoPi / 4.0).epsilon(1e-12));
    CHECK(norm.normalized);

    const StarInstance four = four_job_star();
    const StarInstance n4 = normalize(four);
    CHECK(n4.children[1].w1 == doctest::Approx(7.0 * kTwoPi / 27.0).epsilon(1e-12));

    const StarInstance again = normalize(n4);
    for (int c = 0; c < 4; ++c) {
        CHECK(again.children[c].w0 == doctest::Approx(n4.children[c].w0).epsilon(1e-15));
        CHECK(again.children[c].w1 == doctest::Approx(n4.children[c].w1).epsilon(1e-15));
    }

    StarInstance zero;
    zero.children = {{0, 0}};
    CHECK_THROWS_AS(normalize(zero), DegenerateInstanceError);
}

TEST_CASE("validation catches case violations") {
    StarInstance star;
    star.case_tag = CaseTag::C1;
    star.children = {{1, 2}};
    CHECK_THROWS_AS(validate_star(star), InvalidArgumentError);

    StarInstance neg;
    neg.case_tag = CaseTag::C4;
    neg.children = {{-1, 2}};
    CHECK_THROWS_AS(validate_star(neg), InvalidArgumentError);

    StarInstance empty;
    CHECK_THROWS_AS(validate_star(empty), InvalidArgumentError);
}
