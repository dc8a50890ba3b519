#pragma once

#include <cstdint>
#include <vector>

#include "rivercf/surd.hpp"

namespace rivercf {

// Table of tau(n) (number of positive divisors) for n in [1, limit].
class DivisorSieve {
public:
    explicit DivisorSieve(int64_t limit);

    int64_t limit() const { return limit_; }
    int64_t tau(int64_t n) const;

private:
    int64_t limit_;
    std::vector<std::uint32_t> tau_;
};

// D(n) = sum of tau(n - u^2) over 1 <= u <= floor(sqrt(n)); terms with
// n - u^2 = 0 are skipped (square n only).
int64_t big_d(int64_t n, const DivisorSieve& sieve);

// The triplet-count bound as a function of the discriminant:
//   delta = 0 (mod 4): 2*D(delta/4) + tau(delta/4)
//   delta = 1 (mod 4): 2 * sum over odd i with i^2 < delta of tau((delta-i^2)/4)
// Other residues cannot arise from p^2+4q and are an error.
int64_t f_of_discriminant(int64_t delta, const DivisorSieve& sieve);

// Sum of period elements against the bound f(delta/4), halved for odd T.
struct BoundCheck {
    bool holds = false;
    int64_t lhs = 0;      // sum of period elements
    int64_t rhs_num = 0;  // bound as rhs_num / rhs_den
    int64_t rhs_den = 1;

    bool tight() const { return lhs * rhs_den == rhs_num; }
};

BoundCheck lemma3_bound(const ProblemPoint& pt, const CfPeriod& cf,
                        const DivisorSieve& sieve);

}  // namespace rivercf
