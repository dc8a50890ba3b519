#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "rivercf/divisors.hpp"
#include "rivercf/surd.hpp"
#include "rivercf/topograph.hpp"

using namespace rivercf;

TEST_CASE("form_value") {
    CHECK(form_value({0, 2}, 1, 1) == -1);
    CHECK(form_value({0, 2}, 5, 7) == -1);
    CHECK(form_value({0, 2}, 0, 1) == 1);
    CHECK(form_value({0, 2}, 1, 0) == -2);
    CHECK(form_value({1, 1}, 1, 0) == -1);
}

TEST_CASE("initial_river_state") {
    CHECK(initial_river_state({0, 2}) == RiverState{1, -2, 0});
    CHECK(initial_river_state({1, 1}) == RiverState{1, -1, 1});
    CHECK(initial_river_state({0, 3}) == RiverState{1, -3, 0});
    CHECK_THROWS_AS(initial_river_state({2, 2}), NotNormalized);
    CHECK_THROWS_AS(initial_river_state({2, 3}), NotAnIrrational);
}

TEST_CASE("river_step follows the sqrt(2) cycle") {
    auto [s1, side1] = river_step({1, -1, 2});
    CHECK(s1 == RiverState{2, -1, 0});
    CHECK(side1 == Side::Above);

    auto [s2, side2] = river_step(s1);
    CHECK(s2 == RiverState{1, -1, -2});
    CHECK(side2 == Side::Above);

    auto [s3, side3] = river_step(s2);
    CHECK(s3 == RiverState{1, -2, 0});
    CHECK(side3 == Side::Below);

    auto [s4, side4] = river_step(s3);
    CHECK(s4 == RiverState{1, -1, 2});
    CHECK(side4 == Side::Below);
}

TEST_CASE("river_step rejects a zero face") {
    // a+b+h = 0 forces delta = h^2, a square.
    CHECK_THROWS_AS(river_step({1, -1, 0}), DegenerateForm);
}

TEST_CASE("river_cycle") {
    RiverCycle sqrt2 = river_cycle({0, 2});
    CHECK(sqrt2.length() == 4);
    CHECK(sqrt2.runs == std::vector<int64_t>{2, 2});

    RiverCycle sqrt3 = river_cycle({0, 3});
    CHECK(sqrt3.length() == 3);
    CHECK(sqrt3.runs == std::vector<int64_t>{1, 2});

    RiverCycle golden = river_cycle({1, 1});
    CHECK(golden.length() == 2);
    CHECK(golden.runs == std::vector<int64_t>{1, 1});

    CHECK_THROWS_AS(river_cycle({0, 19}, 5), CycleOverflow);
}

TEST_CASE("cycle_to_period") {
    RiverCycle rc;
    rc.runs = {2, 2};
    CfPeriod cf;
    cf.period = {2};
    CHECK(cycle_to_period(rc, cf).match);  // odd T doubles to (2,2)

    rc.runs = {1, 2};
    cf.period = {1, 2};
    CHECK(cycle_to_period(rc, cf).match);

    rc.runs = {2, 1};
    CHECK(cycle_to_period(rc, cf).match);  // rotation of the same cycle

    rc.runs = {1, 2};
    cf.period = {2, 2};
    MatchResult m = cycle_to_period(rc, cf);
    CHECK_FALSE(m.match);
    CHECK_FALSE(m.diagnostic.empty());
}

TEST_CASE("count_river_triplets") {
    CHECK(count_river_triplets(8) == 4);
    CHECK(count_river_triplets(5) == 2);
    CHECK(count_river_triplets(12) == 6);
    CHECK_THROWS_AS(count_river_triplets(16), InvalidDiscriminant);
    CHECK_THROWS_AS(count_river_triplets(-3), InvalidDiscriminant);
}

TEST_CASE("polyline") {
    Polyline l = polyline({0, 2}, 5);
    std::vector<Polyline::Point> expected{{1, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 7}};
    CHECK(l.points == expected);

    CHECK(polyline({1, 1}, 1).points == std::vector<Polyline::Point>{{1, 1}});
    CHECK_THROWS_AS(polyline({2, 3}, 3), NotAnIrrational);
    CHECK_THROWS_AS(polyline({5, -3}, 3), InputOutOfRange);  // negative root
}

TEST_CASE("polyline steps are primitive vectors and sides follow the runs") {
    for (ProblemPoint pt : {ProblemPoint{0, 2}, {0, 3}, {0, 7}, {1, 3}, {0, 13}}) {
        Polyline l = polyline(pt, 24);
        std::vector<int> sides;
        for (std::size_t i = 0; i + 1 < l.points.size(); ++i) {
            int64_t du = l.points[i + 1].u - l.points[i].u;
            int64_t dv = l.points[i + 1].v - l.points[i].v;
            CHECK(std::gcd(du, dv) == 1);
        }
        for (const auto& p : l.points)
            sides.push_back(form_value(pt, p.u, p.v) > 0 ? 1 : -1);

        // Sign flips exactly at the partial-quotient boundaries a0,a1,a2,...
        CfPeriod cf = cf_period(pt);
        std::vector<int64_t> quotients{cf.a0};
        while (static_cast<int64_t>(quotients.size()) < 24)
            quotients.insert(quotients.end(), cf.period.begin(), cf.period.end());
        std::size_t idx = 0;
        int sign = sides[0];
        for (int64_t a : quotients) {
            for (int64_t j = 0; j < a && idx < sides.size(); ++j, ++idx)
                CHECK(sides[idx] == sign);
            sign = -sign;
            if (idx >= sides.size()) break;
        }
    }
}

TEST_CASE("delta is conserved along every cycle and no prefix closes it") {
    for (int64_t p = 0; p <= 1; ++p) {
        for (int64_t q = 1; q <= 60; ++q) {
            ProblemPoint pt{p, q};
            if (classify(pt) != PointClass::QuadraticIrrational) continue;
            int64_t delta = discriminant(pt);
            RiverCycle rc = river_cycle(pt);
            std::set<std::tuple<int64_t, int64_t, int64_t>> seen;
            for (const RiverState& s : rc.states) {
                CHECK(s.north > 0);
                CHECK(s.south < 0);
                CHECK(s.diff * s.diff - 4 * s.north * s.south == delta);
                CHECK(seen.insert({s.north, s.south, s.diff}).second);
            }
            CHECK(rc.runs.size() % 2 == 0);
            CHECK(std::accumulate(rc.runs.begin(), rc.runs.end(), int64_t{0}) ==
                  rc.length());
        }
    }
}

TEST_CASE("river runs match the CF period over a small disc") {
    for (int64_t p = -20; p <= 20; ++p) {
        for (int64_t q = -20; q <= 20; ++q) {
            ProblemPoint pt{p, q};
            if (p * p + q * q > 400) continue;
            if (classify(pt) != PointClass::QuadraticIrrational) continue;
            CfPeriod cf = cf_period(pt);
            RiverCycle rc = river_cycle(normalize(pt));
            CHECK_MESSAGE(cycle_to_period(rc, cf).match,
                          "p=", pt.p, " q=", pt.q);
        }
    }
}

TEST_CASE("cycle length is bounded by the triplet count") {
    for (int64_t q = 2; q <= 80; ++q) {
        ProblemPoint pt{0, q};
        if (classify(pt) != PointClass::QuadraticIrrational) continue;
        int64_t delta = discriminant(pt);
        CHECK(river_cycle(pt).length() <= count_river_triplets(delta));
    }
}
