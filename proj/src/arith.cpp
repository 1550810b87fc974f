#include "radsplit/arith.hpp"

namespace radsplit {

PValuation vp(const Z& x, const Z& p) {
    if (sgn(x) == 0) return {0, true};
    Z reduced;
    mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return {static_cast<unsigned long>(e), false};
}

unsigned long vp_finite(const Z& x, const Z& p) {
    PValuation v = vp(x, p);
    if (v.is_infinite) throw ZeroValuation("v_p(0) is infinite");
    return v.value;
}

static unsigned long digit_sum(Z x, const Z& p) {
    unsigned long s = 0;
    Z d;
    while (sgn(x) > 0) {
        mpz_fdiv_qr(x.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        s += d.get_ui();
    }
    return s;
}

unsigned long vp_binomial(const Z& n, const Z& i, const Z& p) {
    if (sgn(i) < 0 || i > n) throw RangeError("binomial index outside [0, n]");
    if (p > n) return 0;  // no factor of p in n! at all
    // Legendre: (S_p(i) + S_p(n-i) - S_p(n)) / (p - 1)
    unsigned long s = digit_sum(i, p) + digit_sum(n - i, p) - digit_sum(n, p);
    return s / to_ulong(p - 1);
}

unsigned long vp_binom(unsigned long m, const Z& b, const Z& p) {
    Z pm = zpow(p, m);
    if (sgn(b) < 0 || b > pm) throw RangeError("binomial index outside [0, p^m]");
    if (sgn(b) == 0 || b == pm) return 0;
    return m - vp_finite(b, p);
}

WieferichVal wieferich(const Z& a, const Z& p, unsigned long cap, LiftSchedule schedule) {
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
        throw DivisibleBase("wieferich: p divides a");
    Z pm1 = p - 1;
    unsigned long k = 2;
    for (;;) {
        Z mod = zpow(p, k);
        Z r = zpowm(a, pm1, mod);
        if (r != 1) {
            // v_p(a^(p-1) - 1) < k, so the truncated residue decides it
            return {vp_finite(r - 1, p), k};
        }
        if (k >= cap)
            throw WieferichOverflow("wieferich difference valuation exceeds lifting cap");
        k = schedule == LiftSchedule::Doubling ? k * 2 : k + 1;
        if (k > cap) k = cap;
    }
}

ValSplit split_valuation(unsigned long v, const Z& p) {
    if (v == 0) throw RangeError("split_valuation expects v >= 1");
    ValSplit out;
    out.k = vp_finite(Z(v), p);
    out.h = v / to_ulong(zpow(p, out.k));
    return out;
}

Z euler_phi_pk(const Z& p, unsigned long j) {
    if (j == 0) return 1;
    return zpow(p, j) - zpow(p, j - 1);
}

std::optional<Z> qth_root(const Z& a, const Z& q) {
    unsigned long qi = to_ulong(q);
    if (sgn(a) < 0 && qi % 2 == 0) return std::nullopt;
    Z root;
    int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), qi);
    if (!exact) return std::nullopt;
    if (zpow(root, qi) != a)  // mpz_root already guarantees this; belt and braces
        return std::nullopt;
    return root;
}

}  // namespace radsplit
