#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rivercf/surd.hpp"

namespace rivercf {

// Directed river edge of the indefinite form Q(u,v) = v^2 + p*v*u - q*u^2:
// face value north of the walk, face value south of it, and the common
// difference of the arithmetic progression across the edge.
// Invariant: north > 0 > south and diff^2 - 4*north*south = delta.
struct RiverState {
    int64_t north = 0;
    int64_t south = 0;
    int64_t diff = 0;

    friend bool operator==(const RiverState&, const RiverState&) = default;
};

enum class Side { Above, Below };

struct RiverCycle {
    std::vector<RiverState> states;  // one per step, states[0] is the start
    std::vector<Side> sides;         // turn taken leaving states[i]
    std::vector<int64_t> runs;       // cyclic run lengths of equal sides
    int64_t length() const { return static_cast<int64_t>(states.size()); }
};

struct MatchResult {
    bool match = false;
    std::string diagnostic;
};

struct Polyline {
    struct Point {
        int64_t u = 0;
        int64_t v = 0;
        friend bool operator==(const Point&, const Point&) = default;
    };
    std::vector<Point> points;
};

// v^2 + p*v*u - q*u^2; for u > 0 positive exactly when (u,v) lies above the
// line v = x_plus * u.
int64_t form_value(const ProblemPoint& pt, int64_t u, int64_t v);

// The edge between the faces Q(0,1) = 1 and Q(1,0) = -q of the initial
// superbasis. Requires a normalized quadratic-irrational point.
RiverState initial_river_state(const ProblemPoint& pt);

// One step downstream by the arithmetic-progression rule.
std::pair<RiverState, Side> river_step(const RiverState& s);

inline constexpr int64_t kDefaultCycleCap = 10'000'000;

// Walk from the initial state until it recurs; the side sequence is reduced
// to cyclic run lengths (wrap-around runs merged).
RiverCycle river_cycle(const ProblemPoint& pt, int64_t cycle_cap = kDefaultCycleCap);

// The river runs must equal the CF period (doubled when T is odd) as cyclic
// sequences, up to rotation.
MatchResult cycle_to_period(const RiverCycle& rc, const CfPeriod& cf);

// Exact number of integer triplets (a,b,h) with a > 0 > b and
// h^2 - 4ab = delta, counted by direct divisor enumeration (no sieve).
int64_t count_river_triplets(int64_t delta);

// First `steps` lattice points of the gradual polyline construction,
// equivalently mediant insertion starting from the interval (0/1, 1/0).
Polyline polyline(const ProblemPoint& pt, int64_t steps);

}  // namespace rivercf
