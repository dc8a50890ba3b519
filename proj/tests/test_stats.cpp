#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rivercf/stats.hpp"

using namespace rivercf;

TEST_CASE("enumerate_omega small radii") {
    OmegaCounts counts;
    std::vector<ProblemPoint> omega = enumerate_omega(2, &counts);
    std::vector<ProblemPoint> expected{{-1, 1}, {0, 2}, {1, 1}};
    CHECK(omega == expected);
    CHECK(counts.members == 3);
    CHECK(counts.scanned == 13);
    CHECK(counts.nonreal + counts.rational + counts.members == counts.scanned);

    CHECK(enumerate_omega(1).empty());
    CHECK(enumerate_omega(0).empty());
    CHECK_THROWS_AS(enumerate_omega(-1), InputOutOfRange);
    CHECK_THROWS_AS(enumerate_omega(kMaxRadius + 1), InputOutOfRange);
}

TEST_CASE("mean_period") {
    CHECK(mean_period(2) == Rational(1));
    CHECK_THROWS_AS(mean_period(1), EmptyOmega);
}

TEST_CASE("mean_period_sqrt") {
    CHECK(mean_period_sqrt(5) == Rational(4, 5));
    CHECK(mean_period_sqrt(1) == Rational(0));
    CHECK_THROWS_AS(mean_period_sqrt(0), InputOutOfRange);
    // T0 mean stays under const * sqrt(Q) with const = 3.
    CHECK(static_cast<double>(mean_period_sqrt(100)) < 3.0 * 10.0);
}

TEST_CASE("mean_a_hat and a_prime at R=2") {
    CHECK(mean_a_hat(2) == Rational(4, 3));
    CHECK(a_prime(2) == Rational(4, 3));
    CHECK_THROWS_AS(mean_a_hat(1), EmptyOmega);
    CHECK_THROWS_AS(a_prime(1), EmptyOmega);
}

TEST_CASE("kuzmin_arnold at R=2 pools the multiset {2,1,1}") {
    KuzminHistogram h = kuzmin_arnold(2);
    CHECK(h.mass[1] == doctest::Approx(2.0 / 3.0));
    CHECK(h.mass[2] == doctest::Approx(1.0 / 3.0));
    CHECK(h.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kuzmin_weighted degenerates at R=2 where every T is 1") {
    for (double w : {0.1, 0.5, 0.99}) {
        KuzminHistogram h = kuzmin_weighted(2, w);
        CHECK(h.mass[1] == doctest::Approx(2.0 / 3.0));
        CHECK(h.mass[2] == doctest::Approx(1.0 / 3.0));
    }
    CHECK_THROWS_AS(kuzmin_weighted(2, 0.0), InvalidWeight);
    CHECK_THROWS_AS(kuzmin_weighted(2, 1.0), InvalidWeight);
}

TEST_CASE("weighted_point_mass closed form for period (1,2), w=1/2") {
    CfPeriod cf = cf_period({0, 3});
    REQUIRE(cf.period == std::vector<int64_t>{1, 2});
    KuzminHistogram h = weighted_point_mass(cf, 0.5);
    CHECK(h.mass[1] == doctest::Approx(2.0 / 3.0));
    CHECK(h.mass[2] == doctest::Approx(1.0 / 3.0));
    CHECK(h.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("point mass is normalized for long periods and w near 1") {
    CfPeriod cf = cf_period({0, 1234});
    for (double w : {0.01, 0.5, 0.99, 0.999999}) {
        KuzminHistogram h = weighted_point_mass(cf, w);
        CHECK(h.total() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("theoretical_kuzmin") {
    CHECK(theoretical_kuzmin(1) == doctest::Approx(0.415037).epsilon(1e-6));
    CHECK(theoretical_kuzmin(2) == doctest::Approx(0.169925).epsilon(1e-6));
    double sum = 0.0;
    for (int64_t k = 1; k <= 2'000'000; ++k) sum += theoretical_kuzmin(k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(theoretical_kuzmin(0), InputOutOfRange);
}

TEST_CASE("star_discrepancy") {
    CHECK(star_discrepancy({0.5L}) == doctest::Approx(0.5));
    std::vector<long double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(i / 100.0L);
    CHECK(star_discrepancy(grid) == doctest::Approx(0.01));
    CHECK_THROWS_AS(star_discrepancy({}), InputOutOfRange);
}

TEST_CASE("w near 1 approaches the uniform position average") {
    SweepReport near_one = sweep(30, 0.999999);
    // Explicit uniform averaging over period positions.
    std::vector<double> uniform(near_one.weighted_hist.mass.size(), 0.0);
    double overflow = 0.0;
    std::vector<ProblemPoint> omega = enumerate_omega(30);
    for (const ProblemPoint& pt : omega) {
        CfPeriod cf = cf_period(pt);
        double share = 1.0 / (static_cast<double>(omega.size()) * cf.length());
        for (int64_t a : cf.period) {
            if (a <= near_one.weighted_hist.k_cap)
                uniform[a] += share;
            else
                overflow += share;
        }
    }
    for (std::size_t k = 1; k < uniform.size(); ++k)
        CHECK(std::abs(near_one.weighted_hist.mass[k] - uniform[k]) <= 1e-4);
    CHECK(std::abs(near_one.weighted_hist.overflow - overflow) <= 1e-4);
}

TEST_CASE("p -> -p symmetry") {
    for (int64_t p = 1; p <= 15; ++p) {
        for (int64_t q = -15; q <= 15; ++q) {
            ProblemPoint pt{p, q};
            if (classify(pt) != PointClass::QuadraticIrrational) continue;
            ProblemPoint mirror{-p, q};
            CfPeriod a = cf_period(pt);
            CfPeriod b = cf_period(mirror);
            CHECK(a.period == b.period);  // x_plus values differ by an integer
        }
    }
}

TEST_CASE("sweep at R=2") {
    SweepReport rep = sweep(2, 0.5);
    CHECK(rep.omega_size == 3);
    CHECK(rep.t_hat == Rational(1));
    CHECK(rep.a_prime == Rational(4, 3));
    CHECK(rep.a_mean == Rational(4, 3));
    CHECK(rep.period_total == 3);
    CHECK(rep.element_total == 4);
    CHECK(rep.t_hat * rep.omega_size == Rational(rep.period_total));
    CHECK(rep.arnold_hist.total() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.weighted_hist.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sweep is deterministic and independent of the worker count") {
    SweepReport one = sweep(50, 0.99, kDefaultKCap, 1);
    SweepReport four = sweep(50, 0.99, kDefaultKCap, 4);
    SweepReport again = sweep(50, 0.99, kDefaultKCap, 1);
    CHECK(sweep_csv(one) == sweep_csv(four));
    CHECK(sweep_csv(one) == sweep_csv(again));
}

TEST_CASE("sweep csv shape") {
    SweepReport rep = sweep(2, 0.5, 5);
    std::string summary = sweep_summary_csv(rep);
    CHECK(summary.find("radius,omega_size,t_hat_num,t_hat_den,a_mean_num,"
                       "a_mean_den,a_prime_num,a_prime_den,w,discrepancy\n") == 0);
    CHECK(summary.find("2,3,1,1,4,3,4,3,0.5,") != std::string::npos);
    CHECK(summary.find('\r') == std::string::npos);

    std::string hist = sweep_histogram_csv(rep);
    CHECK(hist.find("k,arnold_freq,weighted_freq,theoretical\n") == 0);
    CHECK(hist.find("overflow,") != std::string::npos);
    // 5 data rows plus header plus the overflow row.
    CHECK(std::count(hist.begin(), hist.end(), '\n') == 7);
}

TEST_CASE("equidistribution_discrepancy shrinks with N") {
    double d100 = equidistribution_discrepancy(100);
    double d5000 = equidistribution_discrepancy(5000);
    CHECK(d100 < 0.2);
    CHECK(d5000 < 0.05);
    CHECK(d5000 < d100);
    CHECK_THROWS_AS(equidistribution_discrepancy(0), InputOutOfRange);
}
