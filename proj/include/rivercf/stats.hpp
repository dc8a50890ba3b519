#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "rivercf/surd.hpp"

namespace rivercf {

using Rational = boost::multiprecision::cpp_rational;

// Membership counts of one disc enumeration.
struct OmegaCounts {
    int64_t scanned = 0;   // all lattice points with p^2+q^2 <= R^2
    int64_t nonreal = 0;   // delta <= 0
    int64_t rational = 0;  // delta a positive square
    int64_t members = 0;   // quadratic irrational points
};

// Points of Omega_R in deterministic order (p ascending, then q ascending).
std::vector<ProblemPoint> enumerate_omega(int64_t radius, OmegaCounts* counts = nullptr);

// Frequency histogram over partial-quotient values 1..k_cap plus an
// aggregate bucket for everything above k_cap.
struct KuzminHistogram {
    int64_t k_cap = 100;
    std::vector<double> mass;  // index 1..k_cap; index 0 unused
    double overflow = 0.0;

    double total() const;
};

inline constexpr int64_t kDefaultKCap = 100;
inline constexpr unsigned kFractionalBits = 60;

// Largest radius for which p^2+4q stays well inside 64 bits.
inline constexpr int64_t kMaxRadius = 100'000;

struct SweepReport {
    int64_t radius = 0;
    OmegaCounts counts;
    int64_t omega_size = 0;
    int64_t period_total = 0;   // sum of T over Omega_R
    int64_t element_total = 0;  // sum of all period elements
    Rational t_hat;             // mean period
    Rational a_mean;            // mean of per-point element means
    Rational a_prime;           // pooled element sum over pooled period sum
    double w = 0.0;
    KuzminHistogram arnold_hist;
    KuzminHistogram weighted_hist;
    double discrepancy = 0.0;  // star discrepancy of {x_plus} over Omega_R
    // Runtime metadata (never serialized to CSV).
    int threads = 1;
    double elapsed_ms = 0.0;
};

// Single enumeration of Omega_R feeding every statistic; deterministic and
// independent of the worker count.
SweepReport sweep(int64_t radius, double w, int64_t k_cap = kDefaultKCap,
                  int threads = 1);

Rational mean_period(int64_t radius);

// T0 over square roots: sum_{q=1..Q} T(0,q) / Q with T(0,square) := 0.
Rational mean_period_sqrt(int64_t q_max);

Rational mean_a_hat(int64_t radius);

Rational a_prime(int64_t radius);

KuzminHistogram kuzmin_arnold(int64_t radius, int64_t k_cap = kDefaultKCap);

KuzminHistogram kuzmin_weighted(int64_t radius, double w, int64_t k_cap = kDefaultKCap);

// Geometric position weights of one period, normalized to total mass 1:
// position i in 1..T carries w^(i-1) * (1-w) / (1-w^T).
KuzminHistogram weighted_point_mass(const CfPeriod& cf, double w,
                                    int64_t k_cap = kDefaultKCap);

// Gauss-Kuzmin limit mass at k.
double theoretical_kuzmin(int64_t k);

// Star discrepancy D*_N of a sample in [0,1), exact from the sorted sample.
double star_discrepancy(std::vector<long double> sample);

// D*_N of the fractional parts of x_plus over the first N quadratic
// irrational points ordered by radius, ties broken lexicographically by
// (p,q). Rational points all have integer x_plus and are skipped.
double equidistribution_discrepancy(int64_t n, unsigned bits = kFractionalBits);

// CSV serialization ('.' decimals, ',' separators, LF endings, header rows).
std::string sweep_summary_csv(const SweepReport& report);
std::string sweep_histogram_csv(const SweepReport& report);
std::string sweep_csv(const SweepReport& report);  // summary + blank + histogram

std::string format_double(double x);  // 15 significant digits, locale-free

}  // namespace rivercf
