#include "radsplit/fppoly.hpp"

#include <algorithm>
#include <sstream>

namespace radsplit {

namespace {

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long invmod(long a, long p) {
    // extended euclid; a nonzero mod p, p prime
    long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw InternalError("invmod: argument not invertible");
    return t < 0 ? t + p : t;
}

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("operands live over different prime fields");
}

}  // namespace

void FpPoly::check_modulus() const {
    if (p_ < 2) throw ModulusMismatch("modulus must be a prime >= 2");
    if (p_ > (1L << 31)) throw ModulusMismatch("modulus too large for dense arithmetic");
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    check_modulus();
    for (auto& c : c_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    trim();
}

FpPoly FpPoly::constant(long p, const Z& c) {
    Z r = c % p;
    if (sgn(r) < 0) r += p;
    return FpPoly(p, {to_long(r)});
}

FpPoly FpPoly::xn_minus_c(long p, long n, const Z& c) {
    if (n < 0 || n > 2000000) throw RangeError("degree out of range for dense arithmetic");
    std::vector<long> v(static_cast<size_t>(n) + 1, 0);
    Z r = (-c) % p;
    if (sgn(r) < 0) r += p;
    v[0] = to_long(r);
    v[static_cast<size_t>(n)] += 1;
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::from_integer_coeffs(long p, const std::vector<Z>& coeffs) {
    std::vector<long> v(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Z r = coeffs[i] % p;
        if (sgn(r) < 0) r += p;
        v[i] = to_long(r);
    }
    return FpPoly(p, std::move(v));
}

long FpPoly::coeff(long i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return 0;
    return c_[static_cast<size_t>(i)];
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    FpPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        long s = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
        r.c_[i] = s >= a.p_ ? s - a.p_ : s;
    }
    r.trim();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    FpPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        long s = (i < a.c_.size() ? a.c_[i] : 0) - (i < b.c_.size() ? b.c_[i] : 0);
        r.c_[i] = s < 0 ? s + a.p_ : s;
    }
    r.trim();
    return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            long& dst = r.c_[i + j];
            dst = (dst + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
    }
    r.trim();
    return r;
}

bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (a.degree() < b.degree()) return {FpPoly(a.p_), a};
    long p = a.p_;
    long linv = invmod(b.leading(), p);
    std::vector<long> rem = a.c_;
    std::vector<long> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    for (long i = a.degree(); i >= b.degree(); --i) {
        long lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        long q = mulmod(lead, linv, p);
        quot[static_cast<size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j) {
            long& dst = rem[static_cast<size_t>(i - b.degree() + j)];
            dst = (dst - mulmod(q, b.c_[static_cast<size_t>(j)], p)) % p;
            if (dst < 0) dst += p;
        }
    }
    FpPoly qq(p), rr(p);
    qq.c_ = std::move(quot);
    qq.trim();
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0L)));
    rr.c_ = std::move(rem);
    rr.trim();
    return {qq, rr};
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = mulmod(c_[i], static_cast<long>(i % static_cast<size_t>(p_)), p_);
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) throw DivisionByZeroPoly("monic() of the zero polynomial");
    return scaled(invmod(leading(), p_));
}

FpPoly FpPoly::scaled(long c) const {
    FpPoly r = *this;
    c %= p_;
    if (c < 0) c += p_;
    for (auto& x : r.c_) x = mulmod(x, c, p_);
    r.trim();
    return r;
}

long FpPoly::eval(long v) const {
    v %= p_;
    if (v < 0) v += p_;
    long acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, v, p_) + c_[i]) % p_;
    return acc;
}

bool FpPoly::canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::string FpPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
    require_same_modulus(a, b);
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FpPoly powmod(FpPoly base, Z exp, const FpPoly& mod) {
    require_same_modulus(base, mod);
    if (sgn(exp) < 0) throw RangeError("negative polynomial exponent");
    FpPoly result = FpPoly(base.modulus(), {1}) % mod;
    base = base % mod;
    while (sgn(exp) > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = (result * base) % mod;
        exp >>= 1;
        if (sgn(exp) > 0) base = (base * base) % mod;
    }
    return result;
}

bool is_separable(const FpPoly& f) {
    if (f.degree() < 1) return true;
    FpPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

FpPoly FactorMultiset::product() const {
    FpPoly acc(p, {unit});
    for (const auto& [g, mult] : factors)
        for (unsigned long i = 0; i < mult; ++i) acc = acc * g;
    return acc;
}

namespace {

// f = g(x^p) with vanishing derivative; in F_p the p-th root just
// reindexes coefficients (Frobenius fixes the prime field).
FpPoly pth_root(const FpPoly& f) {
    long p = f.modulus();
    std::vector<long> out(static_cast<size_t>(f.degree() / p) + 1, 0);
    for (long i = 0; i <= f.degree(); ++i) {
        long c = f.coeff(i);
        if (c == 0) continue;
        if (i % p != 0) throw InternalError("pth_root: polynomial is not of the form g(x^p)");
        out[static_cast<size_t>(i / p)] = c;
    }
    return FpPoly(p, std::move(out));
}

void squarefree_rec(const FpPoly& f, unsigned long scale,
                    std::vector<std::pair<FpPoly, unsigned long>>& out) {
    if (f.degree() < 1) return;
    long p = f.modulus();
    FpPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_rec(pth_root(f), scale * static_cast<unsigned long>(p), out);
        return;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = f / c;
    unsigned long i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) squarefree_rec(pth_root(c), scale * static_cast<unsigned long>(p), out);
}

// f monic squarefree; returns (product of irreducibles of degree d, d)
std::vector<std::pair<FpPoly, long>> distinct_degree(const FpPoly& f) {
    std::vector<std::pair<FpPoly, long>> parts;
    long p = f.modulus();
    FpPoly g = f;
    FpPoly h = FpPoly::x(p) % g;
    long d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, Z(p), g);
        FpPoly gd = gcd(h - FpPoly::x(p), g);
        if (gd.degree() > 0) {
            parts.emplace_back(gd, d);
            g = g / gd;
            h = h % g;
        }
    }
    if (g.degree() > 0) parts.emplace_back(g, g.degree());
    return parts;
}

FpPoly random_poly_below(long p, long deg_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(0, p - 1);
    std::vector<long> c(static_cast<size_t>(deg_bound));
    for (auto& x : c) x = coeff(rng);
    return FpPoly(p, std::move(c));
}

// f monic, a product of r >= 1 distinct irreducibles all of degree d
void equal_degree(const FpPoly& f, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    long p = f.modulus();
    for (;;) {
        FpPoly u = random_poly_below(p, f.degree(), rng);
        if (u.degree() < 1) continue;
        FpPoly g = gcd(u, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map sum_{i<d} u^(2^i) splits the Artin-Schreier fibers
                FpPoly t = u, acc = u;
                for (long i = 1; i < d; ++i) {
                    t = (t * t) % f;
                    acc = acc + t;
                }
                g = gcd(acc, f);
            } else {
                Z e = (zpow(Z(p), static_cast<unsigned long>(d)) - 1) / 2;
                FpPoly v = powmod(u, e, f);
                g = gcd(v - FpPoly(p, {1}), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

FactorMultiset factor_fp(const FpPoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw DivisionByZeroPoly("cannot factor the zero polynomial");
    FactorMultiset fm;
    fm.p = f.modulus();
    fm.unit = f.leading();
    if (f.degree() < 1) return fm;

    std::vector<std::pair<FpPoly, unsigned long>> square_parts;
    squarefree_rec(f.monic(), 1, square_parts);

    for (const auto& [part, mult] : square_parts) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<FpPoly> irreds;
            equal_degree(prod, d, rng, irreds);
            for (auto& g : irreds) fm.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(fm.factors.begin(), fm.factors.end(), [](const auto& a, const auto& b) {
        return FpPoly::canonical_less(a.first, b.first);
    });
    return fm;
}

FactorMultiset factor_fp(const FpPoly& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return factor_fp(f, rng);
}

std::map<long, long> degree_distribution(const FactorMultiset& fm) {
    std::map<long, long> dist;
    for (const auto& [g, mult] : fm.factors) ++dist[g.degree()];
    return dist;
}

Z irred_count(unsigned long f, const Z& p) {
    if (f == 0) throw RangeError("irred_count expects f >= 1");
    // mu(f/d) by factoring the (small) index f
    Z total = 0;
    for (unsigned long d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        unsigned long q = f / d;  // mu(q)
        int mu = 1;
        for (unsigned long t = 2; t * t <= q; ++t) {
            if (q % t != 0) continue;
            q /= t;
            if (q % t == 0) { mu = 0; break; }
            mu = -mu;
        }
        if (mu != 0 && q > 1) mu = -mu;
        if (mu == 0) continue;
        total += mu * zpow(p, d);
    }
    if (!mpz_divisible_ui_p(total.get_mpz_t(), f))
        throw InternalError("irred_count: Moebius sum not divisible by f");
    return total / static_cast<unsigned long>(f);
}

}  // namespace radsplit
