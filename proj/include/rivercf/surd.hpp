#pragma once

#include <cstdint>
#include <vector>

#include "rivercf/errors.hpp"

namespace rivercf {

using std::int64_t;

// Integer point (p,q) of the equation x^2 + p*x = q. Its positive root is
// x_plus = (-p + sqrt(p^2+4q)) / 2.
struct ProblemPoint {
    int64_t p = 0;
    int64_t q = 0;

    friend bool operator==(const ProblemPoint&, const ProblemPoint&) = default;
};

enum class PointClass { NonReal, Rational, QuadraticIrrational };

// Exact state (shift + sqrt(radicand)) / denom of the continued-fraction
// recurrence. Invariant along the recurrence: denom divides radicand - shift^2.
struct SurdState {
    int64_t shift = 0;     // P
    int64_t denom = 1;     // Q, nonzero
    int64_t radicand = 0;  // D, positive non-square

    friend bool operator==(const SurdState&, const SurdState&) = default;
};

// Integer part plus the purely periodic block of partial quotients.
struct CfPeriod {
    int64_t a0 = 0;
    std::vector<int64_t> period;  // a_1 .. a_T, every element >= 1

    int64_t length() const { return static_cast<int64_t>(period.size()); }
    int64_t element_sum() const;
};

// Floor of sqrt(n), exact for all n >= 0.
int64_t isqrt(int64_t n);

bool is_perfect_square(int64_t n);

// p^2 + 4q, overflow-checked.
int64_t discriminant(const ProblemPoint& pt);

PointClass classify(const ProblemPoint& pt);

// Reduce to p in {0,1} preserving the discriminant and the fractional part
// of x_plus.
ProblemPoint normalize(const ProblemPoint& pt);

// Exact floor((shift + sqrt(radicand)) / denom), correct for either sign of
// shift and denom.
int64_t floor_surd(const SurdState& s);

// The state whose value is x_plus(pt).
SurdState initial_surd_state(const ProblemPoint& pt);

// Next complete quotient: x -> 1 / (x - a).
SurdState surd_step(const SurdState& s, int64_t a);

inline constexpr int64_t kDefaultPeriodCap = 10'000'000;

// Full expansion of x_plus(pt): integer part and the purely periodic block,
// detected by the first repetition of a (shift, denom) pair. Throws if the
// repetition does not return to the first post-integer-part state (that
// would mean a pre-period, i.e. a bug).
CfPeriod cf_period(const ProblemPoint& pt, int64_t period_cap = kDefaultPeriodCap);

// Fractional part of x_plus(pt) as floor({x_plus} * 2^(bits+1)) over
// 2^(bits+1); absolute error below 2^-bits. bits must be in [1, 62].
long double fractional_value(const ProblemPoint& pt, unsigned bits);

}  // namespace rivercf
