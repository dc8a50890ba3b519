#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "rivercf/divisors.hpp"
#include "rivercf/stats.hpp"
#include "rivercf/surd.hpp"
#include "rivercf/topograph.hpp"

namespace {

using namespace rivercf;

std::string join(const std::vector<int64_t>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string rational_str(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str() + " = " +
           format_double(static_cast<double>(r));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << text;
}

int run_period(int64_t p, int64_t q, const std::string& format) {
    ProblemPoint pt{p, q};
    switch (classify(pt)) {
        case PointClass::NonReal:
            std::cerr << "non-real roots: delta = " << discriminant(pt) << " <= 0\n";
            return 2;
        case PointClass::Rational:
            std::cerr << "rational root: delta = " << discriminant(pt)
                      << " is a perfect square\n";
            return 2;
        case PointClass::QuadraticIrrational: break;
    }
    int64_t delta = discriminant(pt);
    ProblemPoint norm = normalize(pt);
    CfPeriod cf = cf_period(pt);
    DivisorSieve sieve(delta / 4 + 1);
    BoundCheck bound = lemma3_bound(pt, cf, sieve);
    RiverCycle rc = river_cycle(norm);
    MatchResult match = cycle_to_period(rc, cf);

    if (format == "csv") {
        std::cout << "p,q,class,delta,norm_p,norm_q,a0,period,T,sum,"
                     "f_delta4,bound_holds,tight,river_runs,river_match\n";
        std::cout << p << "," << q << ",quadratic_irrational," << delta << ","
                  << norm.p << "," << norm.q << "," << cf.a0 << ","
                  << join(cf.period, ";") << "," << cf.length() << ","
                  << cf.element_sum() << "," << bound.rhs_num;
        std::cout << "," << (bound.holds ? 1 : 0) << "," << (bound.tight() ? 1 : 0)
                  << "," << join(rc.runs, ";") << "," << (match.match ? 1 : 0) << "\n";
        return 0;
    }

    std::cout << "point:        (" << p << ", " << q << ")\n";
    std::cout << "class:        quadratic irrational\n";
    std::cout << "delta:        " << delta << "\n";
    std::cout << "normalized:   (" << norm.p << ", " << norm.q << ")\n";
    std::cout << "a0:           " << cf.a0 << "\n";
    std::cout << "period:       (" << join(cf.period, ",") << ")\n";
    std::cout << "T:            " << cf.length() << "\n";
    std::cout << "element sum:  " << cf.element_sum() << "\n";
    std::cout << "bound:        " << bound.lhs << " <= " << bound.rhs_num;
    if (bound.rhs_den != 1) std::cout << "/" << bound.rhs_den;
    std::cout << (bound.holds ? (bound.tight() ? "  (holds, tight)" : "  (holds)")
                              : "  (VIOLATED)")
              << "\n";
    std::cout << "river runs:   (" << join(rc.runs, ",") << ")\n";
    std::cout << "river match:  " << (match.match ? "yes" : "no: " + match.diagnostic)
              << "\n";
    return 0;
}

std::string sweep_text(const SweepReport& rep) {
    std::ostringstream out;
    out << "radius:       " << rep.radius << "\n";
    out << "omega size:   " << rep.omega_size << "  (scanned " << rep.counts.scanned
        << ", nonreal " << rep.counts.nonreal << ", rational " << rep.counts.rational
        << ")\n";
    out << "T mean:       " << rational_str(rep.t_hat) << "\n";
    out << "A(R):         " << rational_str(rep.a_mean) << "\n";
    out << "A'(R):        " << rational_str(rep.a_prime) << "\n";
    out << "w:            " << format_double(rep.w) << "\n";
    out << "discrepancy:  " << format_double(rep.discrepancy) << "\n";
    out << "elapsed:      " << format_double(rep.elapsed_ms) << " ms, "
        << rep.threads << " thread(s)\n";
    out << "\nk  arnold  weighted  theoretical\n";
    for (int64_t k = 1; k <= std::min<int64_t>(rep.arnold_hist.k_cap, 20); ++k) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-3lld %.6f %.6f %.6f\n",
                      static_cast<long long>(k), rep.arnold_hist.mass[k],
                      rep.weighted_hist.mass[k], theoretical_kuzmin(k));
        out << line;
    }
    return out.str();
}

int run_sweep(int64_t radius, double w, int64_t k_cap, int threads,
              const std::string& out_path, const std::string& format) {
    SweepReport rep = sweep(radius, w, k_cap, threads);
    write_output(out_path, format == "text" ? sweep_text(rep) : sweep_csv(rep));
    return 0;
}

int run_boundcheck(int64_t radius) {
    OmegaCounts counts;
    std::vector<ProblemPoint> omega = enumerate_omega(radius, &counts);
    if (omega.empty()) throw EmptyOmega("no quadratic irrational points in the disc");
    int64_t delta_max = radius * radius + 4 * radius;
    DivisorSieve sieve(delta_max / 4 + 1);
    int64_t violations = 0;
    std::map<int64_t, int64_t> slack_hist;  // rhs - lhs
    for (const ProblemPoint& pt : omega) {
        CfPeriod cf = cf_period(pt);
        BoundCheck bc = lemma3_bound(pt, cf, sieve);
        if (!bc.holds) ++violations;
        // rhs is f or f/2; f is always even here, so slack is an integer.
        slack_hist[bc.rhs_num / bc.rhs_den - bc.lhs]++;
    }
    std::cout << "radius,omega_size,violations\n";
    std::cout << radius << "," << omega.size() << "," << violations << "\n\n";
    std::cout << "slack,count\n";
    for (auto [slack, count] : slack_hist)
        std::cout << slack << "," << count << "\n";
    return violations == 0 ? 0 : 1;
}

int run_sqrtmean(int64_t q_max) {
    Rational t0 = mean_period_sqrt(q_max);
    std::cout << "qmax,t0_mean_num,t0_mean_den,t0_mean\n";
    std::cout << q_max << "," << boost::multiprecision::numerator(t0).str() << ","
              << boost::multiprecision::denominator(t0).str() << ","
              << format_double(static_cast<double>(t0)) << "\n";
    return 0;
}

int run_equidist(int64_t count, unsigned bits) {
    double d = equidistribution_discrepancy(count, bits);
    std::cout << "count,precision_bits,star_discrepancy\n";
    std::cout << count << "," << bits << "," << format_double(d) << "\n";
    return 0;
}

int run_kuzmin(int64_t k_max) {
    std::cout << "k,theoretical\n";
    for (int64_t k = 1; k <= k_max; ++k)
        std::cout << k << "," << format_double(theoretical_kuzmin(k)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic continued fractions of quadratic irrationalities:\n"
                 "surd recurrence, Conway river, divisor-sum bounds and\n"
                 "Gauss-Kuzmin sweep statistics."};
    app.require_subcommand(1);

    int64_t p = 0, q = 0, radius = 0, q_max = 0, count = 0, k_cap = kDefaultKCap,
            k_max = 20;
    double w = 0.99;
    int threads = 1;
    unsigned bits = kFractionalBits;
    std::string out_path, period_format = "text", sweep_format = "csv";

    auto* period = app.add_subcommand("period", "Analyze a single point (p,q)");
    period->add_option("p", p, "coefficient p of x^2+px=q")->required();
    period->add_option("q", q, "coefficient q of x^2+px=q")->required();
    period->add_option("--format", period_format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Statistics over the disc Omega_R");
    sweep_cmd->add_option("--radius", radius, "disc radius R")->required();
    sweep_cmd->add_option("--w", w, "geometric weight in (0,1)")->default_val(0.99);
    sweep_cmd->add_option("--kcap", k_cap, "histogram tail cap")->default_val(kDefaultKCap);
    sweep_cmd->add_option("--threads", threads, "worker count")->default_val(1);
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));

    auto* boundcheck = app.add_subcommand("boundcheck", "Scan Omega_R for bound violations");
    boundcheck->add_option("--radius", radius, "disc radius R")->required();

    auto* sqrtmean = app.add_subcommand("sqrtmean", "Mean square-root period T0 over q <= Q");
    sqrtmean->add_option("--qmax", q_max, "upper bound Q")->required();

    auto* equidist = app.add_subcommand("equidist", "Star discrepancy of radius-ordered fractional parts");
    equidist->add_option("--count", count, "sample size N")->required();
    equidist->add_option("--precision", bits, "fractional-part precision in bits")
        ->default_val(kFractionalBits);

    auto* kuzmin = app.add_subcommand("kuzmin", "Print theoretical Gauss-Kuzmin masses");
    kuzmin->add_option("--kmax", k_max, "largest k to print")->default_val(20);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, bad input exits 2
    }

    try {
        if (period->parsed()) return run_period(p, q, period_format);
        if (sweep_cmd->parsed()) return run_sweep(radius, w, k_cap, threads, out_path, sweep_format);
        if (boundcheck->parsed()) return run_boundcheck(radius);
        if (sqrtmean->parsed()) return run_sqrtmean(q_max);
        if (equidist->parsed()) return run_equidist(count, bits);
        if (kuzmin->parsed()) return run_kuzmin(k_max);
    } catch (const InputOutOfRange& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const InvalidWeight& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const NotAnIrrational& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
