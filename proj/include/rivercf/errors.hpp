#pragma once

#include <stdexcept>

namespace rivercf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or out-of-range input (includes 64-bit overflow of any
// intermediate quantity; arithmetic never wraps silently).
struct InputOutOfRange : Error { using Error::Error; };

// Operation requires a quadratic irrationality but got a rational or
// non-real point.
struct NotAnIrrational : Error { using Error::Error; };

// Operation requires a normalized point (p in {0,1}).
struct NotNormalized : Error { using Error::Error; };

// Continued-fraction period exceeded the configured cap.
struct PeriodOverflow : Error { using Error::Error; };

// River step produced a zero face value; only possible for a square
// discriminant, which classification must have excluded.
struct DegenerateForm : Error { using Error::Error; };

// River cycle exceeded the configured cap.
struct CycleOverflow : Error { using Error::Error; };

// Divisor sieve does not cover the requested argument.
struct SieveTooSmall : Error { using Error::Error; };

// Discriminant is congruent to 2 or 3 mod 4 (impossible for p^2+4q)
// or is a perfect square.
struct InvalidDiscriminant : Error { using Error::Error; };

// The disc contains no quadratic-irrational points.
struct EmptyOmega : Error { using Error::Error; };

// Geometric weight outside (0,1).
struct InvalidWeight : Error { using Error::Error; };

// Allocation failure while building a table.
struct ResourceLimit : Error { using Error::Error; };

}  // namespace rivercf
