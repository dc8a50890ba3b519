#include "rivercf/stats.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <thread>
#include <tuple>

namespace rivercf {

namespace mp = boost::multiprecision;

std::vector<ProblemPoint> enumerate_omega(int64_t radius, OmegaCounts* counts) {
    if (radius < 0 || radius > kMaxRadius)
        throw InputOutOfRange("radius outside [0, " + std::to_string(kMaxRadius) + "]");
    std::vector<ProblemPoint> out;
    OmegaCounts c;
    int64_t r2 = radius * radius;
    for (int64_t p = -radius; p <= radius; ++p) {
        int64_t qmax = isqrt(r2 - p * p);
        for (int64_t q = -qmax; q <= qmax; ++q) {
            ++c.scanned;
            switch (classify({p, q})) {
                case PointClass::NonReal: ++c.nonreal; break;
                case PointClass::Rational: ++c.rational; break;
                case PointClass::QuadraticIrrational:
                    ++c.members;
                    out.push_back({p, q});
                    break;
            }
        }
    }
    if (counts) *counts = c;
    return out;
}

double KuzminHistogram::total() const {
    double t = overflow;
    for (std::size_t k = 1; k < mass.size(); ++k) t += mass[k];
    return t;
}

double theoretical_kuzmin(int64_t k) {
    if (k < 1) throw InputOutOfRange("theoretical_kuzmin requires k >= 1");
    return std::log1p(1.0 / (static_cast<double>(k) * (k + 2))) / std::log(2.0);
}

KuzminHistogram weighted_point_mass(const CfPeriod& cf, double w, int64_t k_cap) {
    if (!(w > 0.0 && w < 1.0)) throw InvalidWeight("w must lie in (0,1)");
    if (k_cap < 1) throw InputOutOfRange("k_cap must be >= 1");
    KuzminHistogram h;
    h.k_cap = k_cap;
    h.mass.assign(k_cap + 1, 0.0);
    int64_t t = cf.length();
    // 1 - w^T via expm1 keeps the normalization accurate for w near 1.
    double one_minus_wt = -std::expm1(static_cast<double>(t) * std::log(w));
    double weight = (1.0 - w) / one_minus_wt;
    for (int64_t i = 0; i < t; ++i) {
        int64_t a = cf.period[i];
        if (a <= k_cap)
            h.mass[a] += weight;
        else
            h.overflow += weight;
        weight *= w;
    }
    return h;
}

namespace {

// Per-p-column accumulator. Columns are always merged in ascending p order,
// so every statistic (including the floating-point ones) is independent of
// how columns were distributed across workers.
struct ColumnAccum {
    OmegaCounts counts;
    int64_t period_total = 0;
    int64_t element_total = 0;
    Rational a_hat_total;
    std::vector<int64_t> pooled;    // index 1..k_cap, [k_cap+1] overflow
    std::vector<double> weighted;   // unnormalized sum of per-point masses
    std::vector<long double> fractional;

    explicit ColumnAccum(int64_t k_cap)
        : pooled(k_cap + 2, 0), weighted(k_cap + 2, 0.0) {}

    void merge(const ColumnAccum& o) {
        counts.scanned += o.counts.scanned;
        counts.nonreal += o.counts.nonreal;
        counts.rational += o.counts.rational;
        counts.members += o.counts.members;
        period_total += o.period_total;
        element_total += o.element_total;
        a_hat_total += o.a_hat_total;
        for (std::size_t i = 0; i < pooled.size(); ++i) {
            pooled[i] += o.pooled[i];
            weighted[i] += o.weighted[i];
        }
        fractional.insert(fractional.end(), o.fractional.begin(), o.fractional.end());
    }
};

void accumulate_point(ColumnAccum& acc, const ProblemPoint& pt, double w,
                      int64_t k_cap) {
    ++acc.counts.scanned;
    switch (classify(pt)) {
        case PointClass::NonReal: ++acc.counts.nonreal; return;
        case PointClass::Rational: ++acc.counts.rational; return;
        case PointClass::QuadraticIrrational: break;
    }
    ++acc.counts.members;
    CfPeriod cf = cf_period(pt);
    int64_t t = cf.length();
    acc.period_total += t;
    int64_t sum = cf.element_sum();
    acc.element_total += sum;
    acc.a_hat_total += Rational(sum, t);
    for (int64_t a : cf.period) {
        std::size_t idx = (a <= k_cap) ? static_cast<std::size_t>(a) : k_cap + 1;
        ++acc.pooled[idx];
    }
    KuzminHistogram wm = weighted_point_mass(cf, w, k_cap);
    for (int64_t k = 1; k <= k_cap; ++k) acc.weighted[k] += wm.mass[k];
    acc.weighted[k_cap + 1] += wm.overflow;
    acc.fractional.push_back(fractional_value(pt, kFractionalBits));
}

ColumnAccum accumulate_column(int64_t p, int64_t radius, double w, int64_t k_cap) {
    ColumnAccum acc(k_cap);
    int64_t qmax = isqrt(radius * radius - p * p);
    for (int64_t q = -qmax; q <= qmax; ++q)
        accumulate_point(acc, {p, q}, w, k_cap);
    return acc;
}

KuzminHistogram normalize_counts(const std::vector<int64_t>& pooled, int64_t k_cap,
                                 int64_t total) {
    KuzminHistogram h;
    h.k_cap = k_cap;
    h.mass.assign(k_cap + 1, 0.0);
    for (int64_t k = 1; k <= k_cap; ++k)
        h.mass[k] = static_cast<double>(pooled[k]) / static_cast<double>(total);
    h.overflow = static_cast<double>(pooled[k_cap + 1]) / static_cast<double>(total);
    return h;
}

}  // namespace

double star_discrepancy(std::vector<long double> sample) {
    if (sample.empty()) throw InputOutOfRange("star discrepancy of empty sample");
    std::sort(sample.begin(), sample.end());
    auto n = static_cast<long double>(sample.size());
    long double d = 0.0L;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        long double x = sample[i];
        d = std::max(d, x - static_cast<long double>(i) / n);
        d = std::max(d, static_cast<long double>(i + 1) / n - x);
    }
    return static_cast<double>(d);
}

SweepReport sweep(int64_t radius, double w, int64_t k_cap, int threads) {
    if (radius < 0 || radius > kMaxRadius)
        throw InputOutOfRange("radius outside [0, " + std::to_string(kMaxRadius) + "]");
    if (!(w > 0.0 && w < 1.0)) throw InvalidWeight("w must lie in (0,1)");
    if (k_cap < 1) throw InputOutOfRange("k_cap must be >= 1");
    if (threads < 1) threads = 1;

    auto start = std::chrono::steady_clock::now();
    std::size_t columns = static_cast<std::size_t>(2 * radius + 1);
    std::vector<ColumnAccum> partials(columns, ColumnAccum(k_cap));

    if (threads == 1) {
        for (std::size_t i = 0; i < columns; ++i)
            partials[i] = accumulate_column(static_cast<int64_t>(i) - radius, radius, w, k_cap);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < columns; i = next.fetch_add(1))
                partials[i] = accumulate_column(static_cast<int64_t>(i) - radius, radius, w, k_cap);
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ColumnAccum total(k_cap);
    for (const auto& part : partials) total.merge(part);
    if (total.counts.members == 0) throw EmptyOmega("no quadratic irrational points in the disc");

    SweepReport rep;
    rep.radius = radius;
    rep.counts = total.counts;
    rep.omega_size = total.counts.members;
    rep.period_total = total.period_total;
    rep.element_total = total.element_total;
    rep.t_hat = Rational(total.period_total, total.counts.members);
    rep.a_mean = total.a_hat_total / total.counts.members;
    rep.a_prime = Rational(total.element_total, total.period_total);
    rep.w = w;
    rep.arnold_hist = normalize_counts(total.pooled, k_cap, total.period_total);
    rep.weighted_hist.k_cap = k_cap;
    rep.weighted_hist.mass.assign(k_cap + 1, 0.0);
    for (int64_t k = 1; k <= k_cap; ++k)
        rep.weighted_hist.mass[k] = total.weighted[k] / static_cast<double>(total.counts.members);
    rep.weighted_hist.overflow =
        total.weighted[k_cap + 1] / static_cast<double>(total.counts.members);
    rep.discrepancy = star_discrepancy(std::move(total.fractional));
    rep.threads = threads;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

Rational mean_period(int64_t radius) { return sweep(radius, 0.5).t_hat; }

Rational mean_a_hat(int64_t radius) { return sweep(radius, 0.5).a_mean; }

Rational a_prime(int64_t radius) { return sweep(radius, 0.5).a_prime; }

KuzminHistogram kuzmin_arnold(int64_t radius, int64_t k_cap) {
    return sweep(radius, 0.5, k_cap).arnold_hist;
}

KuzminHistogram kuzmin_weighted(int64_t radius, double w, int64_t k_cap) {
    return sweep(radius, w, k_cap).weighted_hist;
}

Rational mean_period_sqrt(int64_t q_max) {
    if (q_max < 1) throw InputOutOfRange("mean_period_sqrt requires Q >= 1");
    int64_t total = 0;
    for (int64_t q = 1; q <= q_max; ++q) {
        if (is_perfect_square(q)) continue;  // T0(square) := 0
        total += cf_period({0, q}).length();
    }
    return Rational(total, q_max);
}

double equidistribution_discrepancy(int64_t n, unsigned bits) {
    if (n < 1) throw InputOutOfRange("equidistribution_discrepancy requires N >= 1");

    // Grow the disc until it holds at least n quadratic-irrational points,
    // then order by radius with lexicographic tie-break and keep the first n.
    // Square-discriminant points are skipped: their x_plus is always an
    // integer, so keeping them plants an atom at 0 that dominates D*_N.
    int64_t r = std::max<int64_t>(2, isqrt(n) + 1);
    std::vector<std::tuple<int64_t, int64_t, int64_t>> pts;  // (p^2+q^2, p, q)
    for (;; r *= 2) {
        if (r > kMaxRadius) throw InputOutOfRange("sample size needs radius beyond cap");
        pts.clear();
        int64_t r2 = r * r;
        for (int64_t p = -r; p <= r; ++p) {
            int64_t qmax = isqrt(r2 - p * p);
            for (int64_t q = -qmax; q <= qmax; ++q) {
                int64_t d = discriminant({p, q});
                if (d > 0 && !is_perfect_square(d)) pts.emplace_back(p * p + q * q, p, q);
            }
        }
        if (static_cast<int64_t>(pts.size()) >= n) break;
    }
    std::sort(pts.begin(), pts.end());
    std::vector<long double> sample;
    sample.reserve(n);
    for (int64_t i = 0; i < n; ++i) {
        auto [d2, p, q] = pts[i];
        sample.push_back(fractional_value({p, q}, bits));
    }
    return star_discrepancy(std::move(sample));
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x,
                             std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

namespace {

std::string rational_parts(const Rational& r) {
    return mp::numerator(r).str() + "," + mp::denominator(r).str();
}

}  // namespace

std::string sweep_summary_csv(const SweepReport& rep) {
    std::string out =
        "radius,omega_size,t_hat_num,t_hat_den,a_mean_num,a_mean_den,"
        "a_prime_num,a_prime_den,w,discrepancy\n";
    out += std::to_string(rep.radius) + "," + std::to_string(rep.omega_size) + ",";
    out += rational_parts(rep.t_hat) + ",";
    out += rational_parts(rep.a_mean) + ",";
    out += rational_parts(rep.a_prime) + ",";
    out += format_double(rep.w) + "," + format_double(rep.discrepancy) + "\n";
    return out;
}

std::string sweep_histogram_csv(const SweepReport& rep) {
    std::string out = "k,arnold_freq,weighted_freq,theoretical\n";
    double theory_tail = 1.0;
    for (int64_t k = 1; k <= rep.arnold_hist.k_cap; ++k) {
        double th = theoretical_kuzmin(k);
        theory_tail -= th;
        out += std::to_string(k) + "," + format_double(rep.arnold_hist.mass[k]) + "," +
               format_double(rep.weighted_hist.mass[k]) + "," + format_double(th) + "\n";
    }
    out += "overflow," + format_double(rep.arnold_hist.overflow) + "," +
           format_double(rep.weighted_hist.overflow) + "," +
           format_double(theory_tail) + "\n";
    return out;
}

std::string sweep_csv(const SweepReport& rep) {
    return sweep_summary_csv(rep) + "\n" + sweep_histogram_csv(rep);
}

}  // namespace rivercf
