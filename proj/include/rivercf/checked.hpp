#pragma once

#include <cstdint>

#include "rivercf/errors.hpp"

namespace rivercf {

// Overflow-checked signed 64-bit arithmetic. Any overflow throws
// InputOutOfRange; results are never wrapped.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw InputOutOfRange("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw InputOutOfRange("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InputOutOfRange("64-bit overflow in multiplication");
    return r;
}

}  // namespace rivercf
