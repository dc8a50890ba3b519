#include "rivercf/divisors.hpp"

#include <new>

namespace rivercf {

DivisorSieve::DivisorSieve(int64_t limit) : limit_(limit) {
    if (limit < 1) throw InputOutOfRange("sieve limit must be >= 1");
    try {
        tau_.assign(static_cast<std::size_t>(limit) + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceLimit("divisor sieve allocation failed");
    }
    for (int64_t d = 1; d <= limit; ++d)
        for (int64_t m = d; m <= limit; m += d) ++tau_[m];
}

int64_t DivisorSieve::tau(int64_t n) const {
    if (n < 1 || n > limit_)
        throw SieveTooSmall("tau argument outside sieve range");
    return tau_[n];
}

int64_t big_d(int64_t n, const DivisorSieve& sieve) {
    if (n < 1) throw InputOutOfRange("big_d requires n >= 1");
    if (n > sieve.limit()) throw SieveTooSmall("big_d argument exceeds sieve limit");
    int64_t sum = 0;
    for (int64_t u = 1; u * u <= n; ++u) {
        int64_t m = n - u * u;
        if (m == 0) continue;  // tau(0) undefined; square n only
        sum += sieve.tau(m);
    }
    return sum;
}

int64_t f_of_discriminant(int64_t delta, const DivisorSieve& sieve) {
    if (delta <= 0 || is_perfect_square(delta))
        throw InvalidDiscriminant("f_of_discriminant requires a positive non-square delta");
    int64_t r = delta % 4;
    if (r == 0) {
        int64_t n = delta / 4;
        return 2 * big_d(n, sieve) + sieve.tau(n);
    }
    if (r == 1) {
        int64_t sum = 0;
        for (int64_t i = 1; i * i < delta; i += 2)
            sum += sieve.tau((delta - i * i) / 4);
        return 2 * sum;
    }
    throw InvalidDiscriminant("delta = 2,3 (mod 4) cannot arise from p^2+4q");
}

BoundCheck lemma3_bound(const ProblemPoint& pt, const CfPeriod& cf,
                        const DivisorSieve& sieve) {
    int64_t delta = discriminant(pt);
    int64_t f = f_of_discriminant(delta, sieve);
    BoundCheck out;
    out.lhs = cf.element_sum();
    if (cf.length() % 2 == 0) {
        out.rhs_num = f;
        out.rhs_den = 1;
    } else {
        out.rhs_num = f;
        out.rhs_den = 2;
    }
    out.holds = out.lhs * out.rhs_den <= out.rhs_num;
    return out;
}

}  // namespace rivercf
