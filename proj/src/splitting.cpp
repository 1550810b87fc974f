#include "radsplit/splitting.hpp"

#include <algorithm>

#include "radsplit/arith.hpp"
#include "radsplit/errors.hpp"

namespace radsplit {

namespace {

constexpr long kMaxPolyDegree = 500000;

long checked_degree(const Z& d, const char* what) {
    if (!fits_long(d) || to_long(d) > kMaxPolyDegree)
        throw RangeError(std::string(what) + " is too large for dense polynomial arithmetic");
    return to_long(d);
}

std::vector<Z> prime_factors_ascending(Z n) {
    std::vector<Z> out;
    for (Z q = 2; q * q <= n && q < 1000000; q += (q == 2 ? 1 : 2)) {
        if (!mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) continue;
        out.push_back(q);
        while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) n /= q;
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            throw RangeError("degree n has a composite factor beyond the trial-division bound");
        out.push_back(n);
    }
    return out;
}

void check_degree_identity(const Decomposition& d, const Z& n) {
    if (d.degree_sum() != n)
        throw InternalError("decomposition violates sum(e*f*count) = n");
}

}  // namespace

std::variant<RadicalInput, Reducible> check_irreducible(const Z& n, const Z& a) {
    if (n < 2) throw RangeError("need n >= 2");
    if (sgn(a) == 0) throw RangeError("need a != 0");
    for (const Z& q : prime_factors_ascending(n)) {
        if (auto root = qth_root(a, q)) {
            Reducible r;
            r.q = q;
            r.root = *root;
            return r;
        }
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), 4) && sgn(a) < 0 &&
        mpz_divisible_ui_p(a.get_mpz_t(), 4)) {
        if (auto t = qth_root(-a / 4, Z(2))) {
            if (auto t2 = qth_root(*t, Z(2))) {
                Reducible r;
                r.sophie_t = *t2;
                return r;
            }
        }
    }
    return RadicalInput(n, a);
}

SplitCase classify(const Z& n, const Z& a, const Z& p) {
    bool p_div_a = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t());
    bool p_div_n = mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t());
    if (p_div_a) {
        unsigned long v = vp_finite(a, p);
        if (!p_div_n || Z(v) % p != 0) return SplitCase::TameRadicand;
        return p == 2 ? SplitCase::UnsupportedEven : SplitCase::Deep;
    }
    if (p_div_n) return p == 2 ? SplitCase::UnsupportedEven : SplitCase::WildIndex;
    return SplitCase::Unramified;
}

SplitCase classify(const RadicalInput& input, const Z& p) {
    return classify(input.n(), input.a(), p);
}

Decomposition split_unramified(const Z& n, const Z& a, const Z& p, std::uint64_t seed) {
    long nl = checked_degree(n, "n");
    Decomposition d;
    d.p = p;
    d.kase = SplitCase::Unramified;
    d.labeling = "mirror";
    FactorMultiset fm = factor_fp(FpPoly::xn_minus_c(to_long(p), nl, a), seed);
    std::map<long, long> per_degree;
    for (const auto& [g, mult] : fm.factors) {
        if (mult != 1)
            throw InternalError("repeated factor although p does not divide the discriminant");
        ++per_degree[g.degree()];
    }
    for (const auto& [f, cnt] : per_degree)
        d.factors.push_back({Z(1), f, cnt, "P_f" + std::to_string(f)});
    check_degree_identity(d, n);
    return d;
}

Decomposition split_tame_radicand(const Z& n, const Z& a, const Z& p, std::uint64_t seed) {
    unsigned long v = vp_finite(a, p);
    Z g;
    mpz_gcd_ui(g.get_mpz_t(), n.get_mpz_t(), v);
    Z e = n / g;
    Z a0 = a / zpow(p, v);

    Decomposition d;
    d.p = p;
    d.kase = SplitCase::TameRadicand;
    d.labeling = "mirror";
    d.params = TameParams{v, g, e, a0};

    long gl = checked_degree(g, "gcd(v_p(a), n)");
    FactorMultiset fm = factor_fp(FpPoly::xn_minus_c(to_long(p), gl, a0), seed);
    std::map<long, long> per_degree;
    for (const auto& [gamma, mult] : fm.factors) {
        if (mult != 1) throw InternalError("residual of a unit radicand must be squarefree");
        ++per_degree[gamma.degree()];
    }
    for (const auto& [f, cnt] : per_degree)
        d.factors.push_back({e, f, cnt, "P_f" + std::to_string(f)});
    check_degree_identity(d, n);
    return d;
}

Decomposition split_wild_index(const Z& n, const Z& a, const Z& p, std::uint64_t seed) {
    unsigned long m = vp_finite(n, p);
    Z n0 = n / zpow(p, m);
    unsigned long w = wieferich(a, p).w;
    // The underlying polygon analysis asks that p avoid two slope
    // numerators. Over Q the base is unramified, so with l = w - 1 those
    // numerators are w = 1 (when l <= 0) and l - w = -1 (when l < m);
    // neither is ever divisible by p, so no extra hypotheses are checked.
    unsigned long b = std::min(w - 1, m);

    Decomposition d;
    d.p = p;
    d.kase = SplitCase::WildIndex;
    d.labeling = "terminal-vertex";  // P_i carries no level, P_{i,j} the vertex exponent j
    d.params = WildParams{m, n0, w, b};

    long n0l = checked_degree(n0, "n0");
    FactorMultiset fm = factor_fp(FpPoly::xn_minus_c(to_long(p), n0l, a), seed);
    Z pmb = zpow(p, m - b);
    int i = 0;
    for (const auto& [phi, mult] : fm.factors) {
        if (mult != 1) throw InternalError("x^n0 - a must be squarefree mod p");
        ++i;
        long f = phi.degree();
        d.factors.push_back({pmb, f, 1, "P_" + std::to_string(i)});
        for (unsigned long j = m - b + 1; j <= m; ++j)
            d.factors.push_back(
                {euler_phi_pk(p, j), f, 1, "P_" + std::to_string(i) + "," + std::to_string(j)});
    }
    check_degree_identity(d, n);
    return d;
}

namespace {

DeepParams deep_params(const Z& n, const Z& a, const Z& p) {
    DeepParams dp;
    unsigned long v = vp_finite(a, p);
    ValSplit hk = split_valuation(v, p);
    dp.h = hk.h;
    dp.k = hk.k;
    dp.a0 = a / zpow(p, v);
    dp.m = vp_finite(n, p);
    dp.n0 = n / zpow(p, dp.m);
    dp.w0 = wieferich(dp.a0, p).w;
    dp.c = std::min({dp.w0 - 1, dp.k, dp.m});
    mpz_gcd_ui(dp.g0.get_mpz_t(), dp.n0.get_mpz_t(), dp.h);
    Z hp1 = Z(dp.h) * (p - 1);
    mpz_gcd(dp.g.get_mpz_t(), dp.n0.get_mpz_t(), hp1.get_mpz_t());
    return dp;
}

}  // namespace

Decomposition split_ppower_deep(unsigned long m, const Z& a, const Z& p) {
    if (m == 0) throw RangeError("need m >= 1");
    DeepParams dp = deep_params(zpow(p, m), a, p);

    Decomposition d;
    d.p = p;
    d.kase = SplitCase::Deep;
    d.labeling = "cyclotomic-level";
    d.params = dp;
    d.factors.push_back({zpow(p, m - dp.c), 1, 1, "P_0"});
    for (unsigned long i = 1; i <= dp.c; ++i)
        d.factors.push_back({zpow(p, m - dp.c) * euler_phi_pk(p, i), 1, 1, "P_" + std::to_string(i)});
    check_degree_identity(d, zpow(p, m));
    return d;
}

Decomposition split_deep(const Z& n, const Z& a, const Z& p, std::uint64_t seed) {
    DeepParams dp = deep_params(n, a, p);

    Decomposition d;
    d.p = p;
    d.kase = SplitCase::Deep;
    d.labeling = "cyclotomic-level";  // P_{i,t}: cyclotomic level i, residual factor t
    d.params = dp;

    Z pmc = zpow(p, dp.m - dp.c);
    long pl = to_long(p);

    // level 0 mirrors y^g0 - a0
    Z e0 = pmc * dp.n0 / dp.g0;
    FactorMultiset f0 = factor_fp(FpPoly::xn_minus_c(pl, checked_degree(dp.g0, "g0"), dp.a0), seed);
    int t = 0;
    for (const auto& [gamma, mult] : f0.factors) {
        if (mult != 1) throw InternalError("y^g0 - a0 must be squarefree mod p");
        d.factors.push_back({e0, gamma.degree(), 1, "P_0," + std::to_string(t++)});
    }

    // levels 1..c all mirror y^g - (-1)^h a0  ((-1)^(h p^k) = (-1)^h for odd p)
    if (dp.c >= 1) {
        Z rhs = dp.h % 2 == 0 ? dp.a0 : -dp.a0;
        FactorMultiset fs = factor_fp(FpPoly::xn_minus_c(pl, checked_degree(dp.g, "g"), rhs), seed);
        for (unsigned long i = 1; i <= dp.c; ++i) {
            Z ei = pmc * euler_phi_pk(p, i) * dp.n0 / dp.g;
            t = 0;
            for (const auto& [gamma, mult] : fs.factors) {
                if (mult != 1) throw InternalError("y^g - (-1)^h a0 must be squarefree mod p");
                d.factors.push_back(
                    {ei, gamma.degree(), 1, "P_" + std::to_string(i) + "," + std::to_string(t++)});
            }
        }
    }
    check_degree_identity(d, n);
    return d;
}

Decomposition split(const RadicalInput& input, const Z& p, std::uint64_t seed) {
    switch (classify(input, p)) {
        case SplitCase::Unramified:
            return split_unramified(input.n(), input.a(), p, seed);
        case SplitCase::TameRadicand:
            return split_tame_radicand(input.n(), input.a(), p, seed);
        case SplitCase::WildIndex:
            return split_wild_index(input.n(), input.a(), p, seed);
        case SplitCase::Deep:
            return split_deep(input.n(), input.a(), p, seed);
        case SplitCase::UnsupportedEven:
            break;
    }
    throw UnsupportedEvenPrime(
        "p = 2 dividing n outside the tame-radicand case: no proven splitting to apply");
}

}  // namespace radsplit
