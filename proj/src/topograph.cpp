#include "rivercf/topograph.hpp"

#include <algorithm>

#include "rivercf/checked.hpp"

namespace rivercf {

int64_t form_value(const ProblemPoint& pt, int64_t u, int64_t v) {
    int64_t vv = checked_mul(v, v);
    int64_t pvu = checked_mul(pt.p, checked_mul(v, u));
    int64_t quu = checked_mul(pt.q, checked_mul(u, u));
    return checked_sub(checked_add(vv, pvu), quu);
}

RiverState initial_river_state(const ProblemPoint& pt) {
    if (classify(pt) != PointClass::QuadraticIrrational)
        throw NotAnIrrational("initial_river_state requires a quadratic irrational point");
    if (pt.p != 0 && pt.p != 1)
        throw NotNormalized("initial_river_state requires p in {0,1}");
    // Faces Q(0,1) = 1 and Q(1,0) = -q; the AP difference across that edge
    // is the cross coefficient p.
    return {1, checked_sub(0, pt.q), pt.p};
}

std::pair<RiverState, Side> river_step(const RiverState& s) {
    int64_t c = checked_add(checked_add(s.north, s.south), s.diff);
    if (c == 0)
        throw DegenerateForm("river reached a zero face: square discriminant");
    if (c > 0)
        return {{c, s.south, checked_add(s.diff, checked_mul(2, s.south))}, Side::Above};
    return {{s.north, c, checked_add(s.diff, checked_mul(2, s.north))}, Side::Below};
}

namespace {

std::vector<int64_t> cyclic_runs(const std::vector<Side>& sides) {
    int64_t n = static_cast<int64_t>(sides.size());
    int64_t start = -1;
    for (int64_t i = 0; i < n; ++i) {
        if (sides[i] != sides[(i + n - 1) % n]) {
            start = i;
            break;
        }
    }
    if (start < 0) return {n};  // all one side; cannot happen on a real river
    std::vector<int64_t> runs;
    int64_t i = start;
    do {
        int64_t len = 1;
        while (sides[(i + len) % n] == sides[i % n] && len < n) ++len;
        runs.push_back(len);
        i += len;
    } while (i < start + n);
    return runs;
}

}  // namespace

RiverCycle river_cycle(const ProblemPoint& pt, int64_t cycle_cap) {
    RiverState start = initial_river_state(pt);
    RiverCycle rc;
    RiverState s = start;
    do {
        if (rc.length() >= cycle_cap)
            throw CycleOverflow("river cycle exceeds configured cap");
        auto [next, side] = river_step(s);
        rc.states.push_back(s);
        rc.sides.push_back(side);
        s = next;
    } while (!(s == start));
    rc.runs = cyclic_runs(rc.sides);
    return rc;
}

MatchResult cycle_to_period(const RiverCycle& rc, const CfPeriod& cf) {
    std::vector<int64_t> expected = cf.period;
    if (cf.length() % 2 != 0)
        expected.insert(expected.end(), cf.period.begin(), cf.period.end());

    if (rc.runs.size() != expected.size())
        return {false, "run count " + std::to_string(rc.runs.size()) +
                           " != expected " + std::to_string(expected.size())};

    // Rotation-invariant comparison: search runs inside expected+expected.
    std::vector<int64_t> doubled = expected;
    doubled.insert(doubled.end(), expected.begin(), expected.end());
    auto it = std::search(doubled.begin(), doubled.end(), rc.runs.begin(), rc.runs.end());
    if (it == doubled.end())
        return {false, "runs are not a rotation of the period"};
    return {true, ""};
}

namespace {

int64_t tau_direct(int64_t m) {
    int64_t count = 0;
    for (int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) count += (d * d == m) ? 1 : 2;
    }
    return count;
}

}  // namespace

int64_t count_river_triplets(int64_t delta) {
    if (delta <= 0 || is_perfect_square(delta))
        throw InvalidDiscriminant("count_river_triplets requires a positive non-square delta");
    // a * (-b) = (delta - h^2) / 4 for each h with h^2 = delta (mod 4),
    // so each admissible h contributes tau((delta - h^2) / 4) pairs.
    int64_t count = 0;
    int64_t h = (delta % 4 == 0) ? 0 : 1;
    if (delta % 4 >= 2) return 0;  // no h has h^2 = 2,3 (mod 4)
    for (; h * h < delta; h += 2) {
        int64_t t = tau_direct((delta - h * h) / 4);
        count += (h == 0) ? t : 2 * t;  // both signs of h
    }
    return count;
}

Polyline polyline(const ProblemPoint& pt, int64_t steps) {
    if (classify(pt) != PointClass::QuadraticIrrational)
        throw NotAnIrrational("polyline requires a quadratic irrational point");
    if (pt.q <= 0)  // x_plus > 0 exactly when q > 0
        throw InputOutOfRange("polyline requires a positive root");
    if (steps < 1) throw InputOutOfRange("polyline requires steps >= 1");

    Polyline::Point low{1, 0};   // the fraction 0/1
    Polyline::Point high{0, 1};  // the fraction 1/0
    Polyline::Point cur{1, 1};
    Polyline out;
    out.points.push_back(cur);
    while (static_cast<int64_t>(out.points.size()) < steps) {
        if (form_value(pt, cur.u, cur.v) < 0)
            low = cur;  // below the line v = x_plus * u
        else
            high = cur;
        cur = {checked_add(low.u, high.u), checked_add(low.v, high.v)};
        out.points.push_back(cur);
    }
    return out;
}

}  // namespace rivercf
