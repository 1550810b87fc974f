// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance here is exact (integer equality).

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "radsplit/arith.hpp"
#include "radsplit/cid.hpp"
#include "radsplit/newton.hpp"
#include "radsplit/splitting.hpp"

using namespace radsplit;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ACHECK(cond, msg)                                       \
    do {                                                        \
        if (!(cond)) {                                          \
            std::ostringstream os_;                             \
            os_ << msg;                                         \
            throw Failure(os_.str() + "  [" #cond "]");         \
        }                                                       \
    } while (0)

using EfSet = std::vector<std::pair<Z, long>>;

EfSet want(std::initializer_list<std::pair<long, long>> xs) {
    EfSet v;
    for (auto [e, f] : xs) v.emplace_back(e, f);
    std::sort(v.begin(), v.end());
    return v;
}

std::string show(const EfSet& s) {
    std::ostringstream os;
    for (const auto& [e, f] : s) os << "(" << e.get_str() << "," << f << ") ";
    return os.str();
}

RadicalInput certified(const Z& n, const Z& a) {
    auto cert = check_irreducible(n, a);
    if (!std::holds_alternative<RadicalInput>(cert))
        throw Failure("fixture x^" + n.get_str() + " - (" + a.get_str() + ") is reducible");
    return std::get<RadicalInput>(cert);
}

void expect_split(const Z& n, const Z& a, const Z& p, const EfSet& expected) {
    EfSet got = split(certified(n, a), p).ef_multiset();
    ACHECK(got == expected, "split(" << n << "," << a << "," << p << ") = " << show(got)
                                     << " wanted " << show(expected));
}

bool cid_of(const Z& n, const Z& a, const Z& p) {
    return is_cid_hensel(split(certified(n, a), p)).verdict == CidVerdict::Yes;
}

// --- criteria ---------------------------------------------------------------

void criterion1() {
    expect_split(Z(27), Z(80), Z(3), want({{1, 1}, {2, 1}, {6, 1}, {18, 1}}));
    Decomposition d1 = split(certified(Z(27), Z(80)), Z(3));
    ACHECK(std::get<WildParams>(d1.params).w == 4, "w(80, 3)");
    ACHECK(cid_of(Z(27), Z(80), Z(3)), "3 must be a CID of Q(80^(1/27))");

    expect_split(Z(729), Z(2186), Z(3),
                 want({{1, 1}, {2, 1}, {6, 1}, {18, 1}, {54, 1}, {162, 1}, {486, 1}}));
    Decomposition d2 = split(certified(Z(729), Z(2186)), Z(3));
    ACHECK(std::get<WildParams>(d2.params).w == 7, "w(2186, 3)");
    ACHECK(cid_of(Z(729), Z(2186), Z(3)), "3 must be a CID of Q(2186^(1/729))");

    expect_split(Z(27), Z(80), Z(7), want({{1, 27}}));
}

void criterion2() {
    expect_split(Z(135), Z(80), Z(3),
                 want({{1, 1}, {2, 1}, {6, 1}, {18, 1}, {1, 4}, {2, 4}, {6, 4}, {18, 4}}));
    ACHECK(cid_of(Z(135), Z(80), Z(3)), "3 must be a CID of Q(80^(1/135))");
    expect_split(Z(2727), Z(80), Z(3),
                 want({{1, 1}, {2, 1}, {6, 1}, {18, 1}, {1, 100}, {2, 100}, {6, 100}, {18, 100}}));
}

void criterion3() {
    Development dev = develop(IntPoly::xn_minus_a(27, Z(80)), IntPoly::linear(Z(80)), Z(3));
    NewtonPolygon poly = principal_polygon(dev);
    std::vector<std::pair<long, long>> vertices{{0, 4}, {1, 3}, {3, 2}, {9, 1}, {27, 0}};
    ACHECK(poly.vertices == vertices, "polygon vertices of x^27 - 80 at x - 80");
    ACHECK(poly.sides.size() == 4, "side count");
    long es[] = {1, 2, 6, 18};
    for (size_t i = 0; i < 4; ++i) {
        ACHECK(poly.sides[i].h == 1 && poly.sides[i].e == es[i],
               "slope " << i << " must be -1/" << es[i]);
    }
    OreResult ore = ore_factorize(Z(27), Z(80), Z(3));
    ACHECK(ore.status == OreStatus::Ok, "dissection must succeed on x^27 - 80 at 3");
    ACHECK(ore.decomposition.ef_multiset() == want({{1, 1}, {2, 1}, {6, 1}, {18, 1}}),
           "dissection decomposition");
}

void criterion4() {
    EfSet got = split_tame_radicand(Z(10), Z(75), Z(5)).ef_multiset();
    ACHECK(got == want({{5, 2}}), "split_tame_radicand(10, 75, 5) = " << show(got));
    Development dev = develop(IntPoly::xn_minus_a(10, Z(75)), IntPoly::linear(Z(0)), Z(5));
    NewtonPolygon poly = principal_polygon(dev);
    ACHECK(poly.sides.size() == 1, "single side");
    ResidualPoly r = residual_poly(dev, poly.sides[0]);
    ACHECK(r.poly == FpPoly(5, {-3, 0, 1}), "residual must be y^2 - 3, got " << r.poly.str('y'));
}

void criterion5() {
    Decomposition d = split(certified(Z(25), Z(81250)), Z(5));
    ACHECK(d.kase == SplitCase::Deep, "(25, 81250, 5) must take the deep route");
    ACHECK(d.ef_multiset() == want({{5, 1}, {20, 1}}), "split(25, 81250, 5)");
    OreResult ore = ore_factorize(Z(25), Z(81250), Z(5));
    ACHECK(ore.status == OreStatus::RequiresFurtherDissection,
           "dissection must refuse x^25 - 81250 at 5 (got " << to_string(ore.status) << ")");
}

void criterion6() {
    expect_split(Z(162), Z(135), Z(3), want({{162, 1}}));
    expect_split(Z(162), Z(3645), Z(3), want({{81, 2}}));
    expect_split(Z(162), Z(7290), Z(3), want({{27, 1}, {27, 1}, {54, 1}, {54, 1}}));
}

void criterion7() {
    Z a108 = zpow(Z(3), 54) * 80;
    Decomposition d1 = split(certified(Z(108), a108), Z(3));
    ACHECK(d1.ef_multiset() ==
               want({{2, 2}, {2, 2}, {2, 2}, {6, 2}, {6, 2}, {18, 2}, {18, 2}}),
           "split(108, 3^54*80, 3) = " << show(d1.ef_multiset()));
    long primes = 0;
    for (const auto& g : d1.factors) primes += g.count;
    ACHECK(primes == 7, "seven primes");
    ACHECK(d1.degree_sum() == 108, "sum e*f = 108");

    Z a810 = zpow(Z(3), 135) * 26;
    Decomposition d2 = split(certified(Z(810), a810), Z(3));
    ACHECK(d2.ef_multiset() == want({{18, 1}, {18, 4}, {18, 1}, {18, 1}, {18, 4}, {18, 4},
                                     {54, 1}, {54, 1}, {54, 4}, {54, 4}}),
           "split(810, 3^135*26, 3) = " << show(d2.ef_multiset()));
    primes = 0;
    for (const auto& g : d2.factors) primes += g.count;
    ACHECK(primes == 10, "ten primes");
    ACHECK(d2.degree_sum() == 810, "sum e*f = 810");
}

// criterion 8: the property sweep
void criterion8() {
    std::mt19937_64 rng(0xACCE5511u);
    std::uniform_int_distribution<long> ndist(2, 200), adist(-500, 500);

    long split_checked = 0, ore_agreed = 0, ore_refused = 0, closed_checked = 0;
    long skipped_reducible = 0, skipped_even = 0;

    auto run_instance = [&](const Z& n, const Z& a, const Z& p) {
        auto cert = check_irreducible(n, a);
        if (!std::holds_alternative<RadicalInput>(cert)) {
            ++skipped_reducible;
            return;
        }
        const RadicalInput& input = std::get<RadicalInput>(cert);
        SplitCase kase = classify(input, p);
        if (kase == SplitCase::UnsupportedEven) {
            ++skipped_even;
            return;
        }
        Decomposition d = split(input, p);
        ACHECK(d.degree_sum() == n,
               "sum(e*f*count) != n at (" << n << "," << a << "," << p << ")");
        ++split_checked;

        CidReport hensel = is_cid_hensel(d);
        switch (kase) {
            case SplitCase::Unramified: {
                for (const auto& g : d.factors)
                    ACHECK(g.e == 1, "unramified exponent must be 1");
                ACHECK(hensel.verdict == CidVerdict::No,
                       "mirrored case can never be a CID (" << n << "," << a << "," << p << ")");
                break;
            }
            case SplitCase::TameRadicand: {
                const auto& tp = std::get<TameParams>(d.params);
                for (const auto& g : d.factors)
                    ACHECK(g.e == tp.e, "tame factors share e = n/g");
                ACHECK(hensel.verdict == CidVerdict::No,
                       "mirrored case can never be a CID (" << n << "," << a << "," << p << ")");
                break;
            }
            case SplitCase::WildIndex: {
                const auto& wp = std::get<WildParams>(d.params);
                long r = 0;
                for (const auto& g : d.factors)
                    if (g.label.find(',') == std::string::npos) ++r;
                long groups = static_cast<long>(d.factors.size());
                long expected = static_cast<long>(std::min<unsigned long>(wp.w, wp.m + 1)) * r;
                ACHECK(groups == expected, "wild group count min(w, m+1)*r at ("
                                               << n << "," << a << "," << p << ")");
                CidReport closed = is_cid_closed_wild(input, p);
                ACHECK(closed.verdict == hensel.verdict,
                       "closed wild verdict != Hensel at (" << n << "," << a << "," << p << ")");
                ++closed_checked;
                break;
            }
            case SplitCase::Deep: {
                CidReport closed = is_cid_closed_deep(input, p);
                ACHECK(closed.verdict == hensel.verdict,
                       "closed deep verdict != Hensel at (" << n << "," << a << "," << p << ")");
                ++closed_checked;
                break;
            }
            case SplitCase::UnsupportedEven:
                break;
        }

        if (mpz_odd_p(p.get_mpz_t())) {
            OreResult ore = ore_factorize(n, a, p);
            if (ore.status == OreStatus::Ok) {
                ACHECK(ore.decomposition.ef_multiset() == d.ef_multiset(),
                       "dissection disagrees with the closed form at (" << n << "," << a << ","
                                                                        << p << ")");
                ++ore_agreed;
            } else {
                ++ore_refused;
            }
        }
    };

    const long primes[] = {2, 3, 5, 7};
    for (long pl : primes) {
        Z p(pl);
        long pm_max = 1;
        while (zpow(p, static_cast<unsigned long>(pm_max + 1)) <= 200) ++pm_max;
        for (int rep = 0; rep < 480; ++rep) {
            long n = 0;
            Z a;
            switch (rep % 4) {
                case 0: {  // anything
                    n = ndist(rng);
                    long av = adist(rng);
                    if (av == 0) av = 1;
                    a = av;
                    break;
                }
                case 1: {  // p | n, p coprime to a
                    long m = 1 + static_cast<long>(rng() % static_cast<unsigned long>(pm_max));
                    long pm = to_long(zpow(p, static_cast<unsigned long>(m)));
                    long n0 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(200 / pm));
                    n = n0 * pm;
                    long av;
                    do { av = adist(rng); } while (av == 0 || av % pl == 0);
                    a = av;
                    break;
                }
                case 2: {  // p | a with assorted valuations
                    n = ndist(rng);
                    long v = 1 + static_cast<long>(rng() % 8);
                    Z pv = zpow(p, static_cast<unsigned long>(v));
                    long bound = pv > 500 ? 1 : to_long(Z(500 / pv));
                    long a0;
                    do { a0 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(bound > 0 ? bound : 1)); } while (a0 % pl == 0);
                    a = Z(a0) * pv * ((rng() & 1) ? 1 : -1);
                    break;
                }
                default: {  // aimed at the deep case: v_p(a) = h*p^k, p | n
                    long m = 1 + static_cast<long>(rng() % static_cast<unsigned long>(pm_max));
                    long pm = to_long(zpow(p, static_cast<unsigned long>(m)));
                    long n0 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(200 / pm));
                    n = n0 * pm;
                    long k = 1 + static_cast<long>(rng() % 2);
                    long h;
                    do { h = 1 + static_cast<long>(rng() % 5); } while (h % pl == 0);
                    unsigned long v = static_cast<unsigned long>(h) *
                                      to_ulong(zpow(p, static_cast<unsigned long>(k)));
                    if (v > 260) v = static_cast<unsigned long>(h) * to_ulong(p);
                    long a0;
                    do { a0 = 2 + static_cast<long>(rng() % 29); } while (a0 % pl == 0);
                    a = Z(a0) * zpow(p, v) * ((rng() & 1) ? 1 : -1);
                    break;
                }
            }
            run_instance(Z(n), a, p);
        }
    }

    // the worked fixtures, including the deep ones outside |a| <= 500
    run_instance(Z(27), Z(80), Z(3));
    run_instance(Z(729), Z(2186), Z(3));
    run_instance(Z(135), Z(80), Z(3));
    run_instance(Z(162), Z(135), Z(3));
    run_instance(Z(162), Z(3645), Z(3));
    run_instance(Z(162), Z(7290), Z(3));
    run_instance(Z(81), Z(7290), Z(3));
    run_instance(Z(25), Z(81250), Z(5));
    run_instance(Z(108), zpow(Z(3), 54) * 80, Z(3));
    run_instance(Z(810), zpow(Z(3), 135) * 26, Z(3));

    ACHECK(split_checked > 1200, "sweep too thin: " << split_checked);
    ACHECK(ore_agreed > 400, "dissection oracle exercised too rarely: " << ore_agreed);
    ACHECK(closed_checked > 200, "closed-form CID tests exercised too rarely: " << closed_checked);

    // binomial valuation grid: all prime powers p^m <= 3^7, every b, against the
    // materialized binomial row
    {
        long bound = 2187;
        std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
        for (long q = 2; q * q <= bound; ++q)
            if (sieve[static_cast<size_t>(q)])
                for (long t = q * q; t <= bound; t += q) sieve[static_cast<size_t>(t)] = false;
        long checked41 = 0;
        for (long pl = 2; pl <= bound; ++pl) {
            if (!sieve[static_cast<size_t>(pl)]) continue;
            Z p(pl);
            for (unsigned long m = 1;; ++m) {
                Z pmz = zpow(p, m);
                if (pmz > bound) break;
                unsigned long N = to_ulong(pmz);
                Z bin = 1;  // binomial(N, b), updated incrementally
                for (unsigned long b = 0; b <= N; ++b) {
                    unsigned long got = vp_binom(m, Z(b), p);
                    unsigned long oracle = (b == 0 || b == N) ? 0 : vp_finite(bin, p);
                    if (got != oracle || got != vp_binomial(pmz, Z(b), p))
                        throw Failure("vp_binom mismatch at p^m = " + std::to_string(N) +
                                      ", b = " + std::to_string(b));
                    if (b < N) {
                        bin *= N - b;
                        mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), b + 1);
                    }
                    ++checked41;
                }
            }
        }
        ACHECK(checked41 > 300000, "binomial valuation grid too thin: " << checked41);
    }

    // exponent-independence grid: v_p(a^(p^m) - a) by exact subtraction equals wieferich
    for (long pl : {3L, 5L, 7L}) {
        Z p(pl);
        for (long mag = 2; mag <= 200; ++mag) {
            for (long sign : {1L, -1L}) {
                long av = sign * mag;
                if (av % pl == 0) continue;
                unsigned long w = wieferich(Z(av), p).w;
                for (unsigned long m = 1; m <= 3; ++m) {
                    Z diff = zpow(Z(av), to_ulong(zpow(p, m))) - av;
                    if (vp_finite(diff, p) != w)
                        throw Failure("wieferich mismatch at a = " + std::to_string(av) +
                                      ", p = " + std::to_string(pl) + ", m = " + std::to_string(m));
                }
            }
        }
    }

    // primes coprime to n are never CIDs; 1000 instances
    {
        const long ps[] = {3, 5, 7, 11, 13};
        long done = 0;
        while (done < 1000) {
            long n = 2 + static_cast<long>(rng() % 99);
            long av = adist(rng);
            if (av == 0) continue;
            Z p(ps[rng() % 5]);
            if (Z(n) % p == 0) continue;
            auto cert = check_irreducible(Z(n), Z(av));
            if (!std::holds_alternative<RadicalInput>(cert)) continue;
            const RadicalInput& input = std::get<RadicalInput>(cert);
            if (classify(input, p) == SplitCase::UnsupportedEven) continue;
            CidReport rep = is_cid_hensel(split(input, p));
            ACHECK(rep.verdict == CidVerdict::No,
                   "p coprime to n flagged as CID at (" << n << "," << av << "," << p << ")");
            ++done;
        }
    }

    std::printf(
        "         sweep: %ld splits, %ld dissection agreements, %ld dissection refusals,\n"
        "                %ld closed-form cross-checks, %ld reducible skipped, %ld even skipped\n",
        split_checked, ore_agreed, ore_refused, closed_checked, skipped_reducible, skipped_even);
}

// criterion 9: Gauss counts against exhaustive enumeration for p^f <= 2401
void criterion9() {
    auto brute_irreducible = [](const FpPoly& f) {
        long p = f.modulus();
        for (long d = 1; 2 * d <= f.degree(); ++d) {
            std::vector<long> c(static_cast<size_t>(d) + 1, 0);
            c.back() = 1;
            for (;;) {
                if ((f % FpPoly(p, c)).is_zero()) return false;
                long i = 0;
                while (i < d && c[static_cast<size_t>(i)] == p - 1)
                    c[static_cast<size_t>(i++)] = 0;
                if (i == d) break;
                ++c[static_cast<size_t>(i)];
            }
        }
        return f.degree() >= 1;
    };

    long bound = 2401;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long q = 2; q * q <= bound; ++q)
        if (sieve[static_cast<size_t>(q)])
            for (long t = q * q; t <= bound; t += q) sieve[static_cast<size_t>(t)] = false;

    long pairs = 0;
    for (long pl = 2; pl <= bound; ++pl) {
        if (!sieve[static_cast<size_t>(pl)]) continue;
        for (unsigned long f = 1;; ++f) {
            if (zpow(Z(pl), f) > bound) break;
            long count = 0;
            std::vector<long> c(f + 1, 0);
            c.back() = 1;
            for (;;) {
                if (brute_irreducible(FpPoly(pl, c))) ++count;
                size_t i = 0;
                while (i < f && c[i] == pl - 1) c[i++] = 0;
                if (i == f) break;
                ++c[i];
            }
            if (irred_count(f, Z(pl)) != count)
                throw Failure("Gauss count mismatch at p = " + std::to_string(pl) +
                              ", f = " + std::to_string(f));
            ++pairs;
        }
    }
    ACHECK(pairs > 380, "Gauss grid too thin: " << pairs);
    std::printf("         gauss: %ld (p, f) pairs enumerated exhaustively\n", pairs);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "wild splittings of x^27-80 and x^729-2186 at 3; 7 inert in Q(80^(1/27))", criterion1},
        {2, "wild splittings with nontrivial n0: x^135-80 and x^2727-80 at 3", criterion2},
        {3, "principal polygon of x^27-80 at x-80 and the matching dissection", criterion3},
        {4, "tame splitting of x^10-75 at 5 with residual y^2-3", criterion4},
        {5, "deep splitting of x^25-81250 at 5; dissection refuses the inseparable residual",
         criterion5},
        {6, "deep splittings of x^162-135, x^162-3645, x^162-7290 at 3", criterion6},
        {7, "deep splittings of x^108-3^54*80 and x^810-3^135*26 at 3", criterion7},
        {8, "property sweep: degree identity, dissection agreement, CID cross-checks, "
            "valuation grids, coprime primes never CIDs", criterion8},
        {9, "Gauss irreducible counts equal exhaustive enumeration for p^f <= 2401", criterion9},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        try {
            c.body();
            std::printf("[PASS] criterion %d: %s\n", c.id, c.title);
        } catch (const std::exception& e) {
            ++failed;
            std::printf("[FAIL] criterion %d: %s\n        %s\n", c.id, c.title, e.what());
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}
