#include "rivercf/surd.hpp"

#include <gmp.h>

#include <cmath>
#include <unordered_map>
#include <utility>

#include "rivercf/checked.hpp"

namespace rivercf {

namespace {

// Floor division, exact for negative numerators. b > 0.
int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

struct PairHash {
    std::size_t operator()(const std::pair<int64_t, int64_t>& pq) const {
        std::size_t h = std::hash<int64_t>{}(pq.first);
        h ^= std::hash<int64_t>{}(pq.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

int64_t CfPeriod::element_sum() const {
    int64_t s = 0;
    for (int64_t a : period) s = checked_add(s, a);
    return s;
}

int64_t isqrt(int64_t n) {
    if (n < 0) throw InputOutOfRange("isqrt of negative value");
    if (n == 0) return 0;
    auto x = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    // sqrt(double) can be off by one in either direction near 2^62.
    if (x > 3037000499) x = 3037000499;  // floor(sqrt(2^63 - 1))
    while (x * x > n) --x;
    while (x < 3037000499 && (x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_perfect_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

int64_t discriminant(const ProblemPoint& pt) {
    return checked_add(checked_mul(pt.p, pt.p), checked_mul(4, pt.q));
}

PointClass classify(const ProblemPoint& pt) {
    int64_t d = discriminant(pt);
    if (d <= 0) return PointClass::NonReal;
    if (is_perfect_square(d)) return PointClass::Rational;
    return PointClass::QuadraticIrrational;
}

ProblemPoint normalize(const ProblemPoint& pt) {
    if (classify(pt) != PointClass::QuadraticIrrational)
        throw NotAnIrrational("normalize requires a quadratic irrational point");
    int64_t d = discriminant(pt);
    // p^2+4q is 0 or 1 mod 4, so the reduced p is the parity of the
    // discriminant and q follows from preserving it.
    int64_t p = d & 1;
    int64_t q = (d - p) / 4;
    return {p, q};
}

int64_t floor_surd(const SurdState& s) {
    if (s.denom == 0) throw InputOutOfRange("floor_surd: zero denominator");
    int64_t r = isqrt(s.radicand);
    // sqrt(radicand) is irrational, so the open bracket (r, r+1) around it
    // cannot contain an integer multiple of denom in the wrong direction.
    if (s.denom > 0) return floor_div(checked_add(s.shift, r), s.denom);
    return floor_div(checked_sub(checked_sub(-s.shift, r), 1), -s.denom);
}

SurdState initial_surd_state(const ProblemPoint& pt) {
    int64_t d = discriminant(pt);
    return {checked_sub(0, pt.p), 2, d};
}

SurdState surd_step(const SurdState& s, int64_t a) {
    // x -> 1/(x - a): P' = a*Q - P, Q' = (D - P'^2) / Q (exact).
    int64_t p2 = checked_sub(checked_mul(a, s.denom), s.shift);
    int64_t q2 = (checked_sub(s.radicand, checked_mul(p2, p2))) / s.denom;
    return {p2, q2, s.radicand};
}

CfPeriod cf_period(const ProblemPoint& pt, int64_t period_cap) {
    if (classify(pt) != PointClass::QuadraticIrrational)
        throw NotAnIrrational("cf_period requires a quadratic irrational point");

    SurdState s = initial_surd_state(pt);
    CfPeriod out;
    out.a0 = floor_surd(s);
    s = surd_step(s, out.a0);

    std::unordered_map<std::pair<int64_t, int64_t>, int64_t, PairHash> seen;
    std::vector<int64_t> quotients;
    for (int64_t step = 1;; ++step) {
        if (step > period_cap)
            throw PeriodOverflow("period exceeds configured cap");
        auto key = std::make_pair(s.shift, s.denom);
        auto [it, inserted] = seen.emplace(key, step);
        if (!inserted) {
            if (it->second != 1)
                throw Error("pre-period detected in surd recurrence");
            out.period = std::move(quotients);
            return out;
        }
        int64_t a = floor_surd(s);
        if (a < 1) throw Error("non-positive partial quotient in reduced state");
        quotients.push_back(a);
        s = surd_step(s, a);
    }
}

long double fractional_value(const ProblemPoint& pt, unsigned bits) {
    if (bits < 1 || bits > 62)
        throw InputOutOfRange("fractional_value: bits must be in [1,62]");
    int64_t d = discriminant(pt);
    if (d <= 0) throw NotAnIrrational("fractional_value requires a real root");

    // Z = floor(sqrt(D * 4^bits)) - p * 2^bits approximates
    // x_plus * 2^(bits+1) within 1; reduce mod 2^(bits+1).
    mpz_t z, pp;
    mpz_init(z);
    mpz_init(pp);
    mpz_set_si(z, d);
    mpz_mul_2exp(z, z, 2 * bits);
    mpz_sqrt(z, z);
    mpz_set_si(pp, pt.p);
    mpz_mul_2exp(pp, pp, bits);
    mpz_sub(z, z, pp);
    mpz_fdiv_r_2exp(z, z, bits + 1);
    unsigned long long num = mpz_get_ui(z);
    mpz_clear(z);
    mpz_clear(pp);
    return static_cast<long double>(num) /
           static_cast<long double>(1ULL << (bits + 1));
}

}  // namespace rivercf
