#include "radsplit/cid.hpp"

#include <algorithm>
#include <map>

#include "radsplit/arith.hpp"
#include "radsplit/errors.hpp"

namespace radsplit {

const char* to_string(CidVerdict v) {
    switch (v) {
        case CidVerdict::No: return "no";
        case CidVerdict::Yes: return "yes";
        case CidVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(CidMethod m) {
    switch (m) {
        case CidMethod::HenselCount: return "hensel_count";
        case CidMethod::ClosedFormWild: return "closed_form_wild";
        case CidMethod::ClosedFormDeep: return "closed_form_deep";
        case CidMethod::NeverByCase: return "never_by_case";
    }
    return "?";
}

namespace {

// verdict from per-residue-degree prime counts; smallest exceeding f wins
CidReport report_from_counts(const Z& p, const std::map<long, long>& counts, CidMethod method) {
    CidReport rep;
    rep.p = p;
    rep.method = method;
    for (const auto& [f, cnt] : counts) {
        Z bound = irred_count(static_cast<unsigned long>(f), p);
        if (cnt > bound) {
            rep.verdict = CidVerdict::Yes;
            rep.witness = CidWitness{f, cnt, bound};
            return rep;
        }
    }
    rep.verdict = CidVerdict::No;
    return rep;
}

std::map<long, long> residual_degree_distribution(const Z& p, long degree, const Z& constant,
                                                  std::uint64_t seed) {
    FactorMultiset fm = factor_fp(FpPoly::xn_minus_c(to_long(p), degree, constant), seed);
    return degree_distribution(fm);
}

}  // namespace

CidReport is_cid_hensel(const Decomposition& decomp) {
    std::map<long, long> counts;
    for (const auto& g : decomp.factors) counts[g.f] += g.count;
    return report_from_counts(decomp.p, counts, CidMethod::HenselCount);
}

CidReport is_cid_closed_wild(const RadicalInput& input, const Z& p, std::uint64_t seed) {
    if (classify(input, p) != SplitCase::WildIndex)
        throw WrongCase("closed wild-case test applied outside the wild case");
    const Z& n = input.n();
    const Z& a = input.a();
    unsigned long m = vp_finite(n, p);
    Z n0 = n / zpow(p, m);
    unsigned long w = wieferich(a, p).w;
    long mult = static_cast<long>(std::min<unsigned long>(w, m + 1));

    std::map<long, long> counts;
    for (const auto& [f, df] : residual_degree_distribution(p, to_long(n0), a, seed))
        counts[f] = mult * df;
    CidReport rep = report_from_counts(p, counts, CidMethod::ClosedFormWild);
    return rep;
}

CidReport is_cid_closed_deep(const RadicalInput& input, const Z& p, std::uint64_t seed) {
    if (classify(input, p) != SplitCase::Deep)
        throw WrongCase("closed deep-case test applied outside the deep case");
    const Z& n = input.n();
    const Z& a = input.a();
    unsigned long v = vp_finite(a, p);
    ValSplit hk = split_valuation(v, p);
    Z a0 = a / zpow(p, v);
    unsigned long m = vp_finite(n, p);
    Z n0 = n / zpow(p, m);
    unsigned long w0 = wieferich(a0, p).w;
    long c = static_cast<long>(std::min({w0 - 1, hk.k, m}));
    Z g0, g;
    mpz_gcd_ui(g0.get_mpz_t(), n0.get_mpz_t(), hk.h);
    Z hp1 = Z(hk.h) * (p - 1);
    mpz_gcd(g.get_mpz_t(), n0.get_mpz_t(), hp1.get_mpz_t());

    std::map<long, long> counts;
    for (const auto& [f, df0] : residual_degree_distribution(p, to_long(g0), a0, seed))
        counts[f] += df0;
    if (c > 0) {
        Z rhs = hk.h % 2 == 0 ? a0 : -a0;
        for (const auto& [f, df] : residual_degree_distribution(p, to_long(g), rhs, seed))
            counts[f] += c * df;
    }
    return report_from_counts(p, counts, CidMethod::ClosedFormDeep);
}

std::vector<CidReport> enumerate_cids(const RadicalInput& input, std::uint64_t seed) {
    std::vector<CidReport> out;
    Z n = input.n();
    std::vector<Z> primes;
    for (Z q = 2; q * q <= n && q < 1000000; q += (q == 2 ? 1 : 2)) {
        if (!mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) continue;
        primes.push_back(q);
        while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) n /= q;
    }
    if (n > 1) primes.push_back(n);

    for (const Z& q : primes) {
        SplitCase kase = classify(input, q);
        CidReport rep;
        rep.p = q;
        switch (kase) {
            case SplitCase::Unramified:
            case SplitCase::TameRadicand:
                rep.verdict = CidVerdict::No;
                rep.method = CidMethod::NeverByCase;
                break;
            case SplitCase::UnsupportedEven:
                rep.verdict = CidVerdict::Undetermined;
                break;
            case SplitCase::WildIndex:
            case SplitCase::Deep: {
                rep = is_cid_hensel(split(input, q, seed));
                CidReport closed = kase == SplitCase::WildIndex
                                       ? is_cid_closed_wild(input, q, seed)
                                       : is_cid_closed_deep(input, q, seed);
                if (closed.verdict != rep.verdict)
                    throw InternalError("closed-form CID test disagrees with the Hensel count");
                break;
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace radsplit
