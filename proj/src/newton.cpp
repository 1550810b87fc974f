#include "radsplit/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace radsplit {

const char* to_string(SplitCase c) {
    switch (c) {
        case SplitCase::Unramified: return "unramified";
        case SplitCase::TameRadicand: return "tame_radicand";
        case SplitCase::WildIndex: return "wild_index";
        case SplitCase::Deep: return "deep";
        case SplitCase::UnsupportedEven: return "unsupported_even";
    }
    return "?";
}

std::vector<std::pair<Z, long>> Decomposition::ef_multiset() const {
    std::vector<std::pair<Z, long>> out;
    for (const auto& g : factors)
        for (long i = 0; i < g.count; ++i) out.emplace_back(g.e, g.f);
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(OreStatus s) {
    switch (s) {
        case OreStatus::Ok: return "ok";
        case OreStatus::RequiresFurtherDissection: return "requires_further_dissection";
        case OreStatus::ExtensionCoefficients: return "extension_coefficients";
    }
    return "?";
}

// --- IntPoly ---------------------------------------------------------------

void IntPoly::trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

IntPoly IntPoly::xn_minus_a(long n, const Z& a) {
    if (n < 1 || n > 2000000) throw RangeError("degree out of range for dense development");
    std::vector<Z> v(static_cast<size_t>(n) + 1, Z(0));
    v[0] = -a;
    v[static_cast<size_t>(n)] += 1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Z& r) { return IntPoly({-r, Z(1)}); }

IntPoly IntPoly::from_fp(const FpPoly& f) {
    std::vector<Z> v;
    v.reserve(f.coeffs().size());
    for (long x : f.coeffs()) v.emplace_back(x);
    return IntPoly(std::move(v));
}

const Z& IntPoly::coeff(long i) const {
    static const Z zero(0);
    if (i < 0 || static_cast<size_t>(i) >= c.size()) return zero;
    return c[static_cast<size_t>(i)];
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Z> v(std::max(a.c.size(), b.c.size()), Z(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c.size()) v[i] += a.c[i];
        if (i < b.c.size()) v[i] += b.c[i];
    }
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Z> v(std::max(a.c.size(), b.c.size()), Z(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c.size()) v[i] += a.c[i];
        if (i < b.c.size()) v[i] -= b.c[i];
    }
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Z> v(a.c.size() + b.c.size() - 1, Z(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    if (!b.is_monic()) throw NotMonic("divisor must be monic");
    long db = b.degree();
    if (a.degree() < db) return {IntPoly(), a};
    std::vector<Z> rem = a.c;
    std::vector<Z> quot(static_cast<size_t>(a.degree() - db) + 1, Z(0));
    for (long i = a.degree(); i >= db; --i) {
        Z q = rem[static_cast<size_t>(i)];
        if (sgn(q) == 0) continue;
        quot[static_cast<size_t>(i - db)] = q;
        for (long j = 0; j < db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.c[static_cast<size_t>(j)];
        rem[static_cast<size_t>(i)] = 0;
    }
    rem.resize(static_cast<size_t>(db));
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        Z v = c[i];
        if (first) {
            if (sgn(v) < 0) os << "-";
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
        }
        first = false;
        Z av = abs(v);
        if (i == 0 || av != 1) os << av.get_str();
        if (i > 0) {
            if (av != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// --- development -----------------------------------------------------------

namespace {

PValuation gauss_valuation(const IntPoly& a, const Z& p) {
    PValuation best{0, true};
    for (const Z& c : a.c) {
        if (sgn(c) == 0) continue;
        unsigned long v = vp_finite(c, p);
        if (best.is_infinite || v < best.value) best = {v, false};
        if (best.value == 0) break;
    }
    return best;
}

bool is_two_term_monic(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) return false;
    for (long i = 1; i < f.degree(); ++i)
        if (sgn(f.coeff(i)) != 0) return false;
    return true;
}

}  // namespace

Development develop(const IntPoly& f, const IntPoly& phi, const Z& p) {
    if (!f.is_monic() || !phi.is_monic()) throw NotMonic("development needs monic f and phi");
    if (phi.degree() < 1 || phi.degree() > f.degree())
        throw RangeError("need 1 <= deg phi <= deg f");

    Development dev;
    dev.f = f;
    dev.phi = phi;
    dev.p = p;

    if (phi.degree() == 1 && sgn(phi.coeff(0)) == 0) {
        // phi = x: the development is the coefficient list itself
        for (long i = 0; i <= f.degree(); ++i) dev.coeffs.push_back(IntPoly({f.coeff(i)}));
    } else if (phi.degree() == 1 && is_two_term_monic(f)) {
        // f = x^N - a at phi = x - r: a_i = binom(N, i) r^(N-i), a_0 = r^N - a.
        // Coefficients are built incrementally; valuations use digit sums.
        long N = f.degree();
        Z r = -phi.coeff(0);
        Z a = -f.coeff(0);
        unsigned long vr = 0;
        bool r_unit_or_zero = true;
        {
            PValuation v = vp(r, p);
            if (!v.is_infinite) { vr = v.value; r_unit_or_zero = false; }
        }
        dev.coeffs.push_back(IntPoly({zpow(r, static_cast<unsigned long>(N)) - a}));
        Z binom = 1;
        Z rpow = zpow(r, static_cast<unsigned long>(N - 1));
        for (long i = 1; i <= N; ++i) {
            binom *= (N - i + 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i));
            dev.coeffs.push_back(IntPoly({binom * rpow}));
            if (i < N && !r_unit_or_zero)
                mpz_divexact(rpow.get_mpz_t(), rpow.get_mpz_t(), r.get_mpz_t());
            else if (i < N)
                rpow = zpow(r, static_cast<unsigned long>(N - 1 - i));
        }
        dev.valuations.push_back(vp(dev.coeffs[0].coeff(0), p));
        for (long i = 1; i <= N; ++i) {
            if (dev.coeffs[static_cast<size_t>(i)].is_zero()) {
                dev.valuations.push_back({0, true});
            } else {
                unsigned long v = vp_binomial(Z(N), Z(i), p) + static_cast<unsigned long>(N - i) * vr;
                dev.valuations.push_back({v, false});
            }
        }
        return dev;
    } else {
        IntPoly cur = f;
        while (cur.degree() >= phi.degree()) {
            auto [q, rem] = IntPoly::divmod_monic(cur, phi);
            dev.coeffs.push_back(std::move(rem));
            cur = std::move(q);
        }
        dev.coeffs.push_back(std::move(cur));
    }

    dev.valuations.reserve(dev.coeffs.size());
    for (const auto& a : dev.coeffs) dev.valuations.push_back(gauss_valuation(a, p));
    return dev;
}

// --- principal polygon -----------------------------------------------------

namespace {

long long cross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon principal_polygon(const Development& dev) {
    std::vector<std::pair<long, long>> pts;
    for (size_t i = 0; i < dev.valuations.size(); ++i) {
        if (dev.valuations[i].is_infinite) continue;
        pts.emplace_back(static_cast<long>(i), static_cast<long>(dev.valuations[i].value));
    }
    if (pts.size() < 2)
        throw EmptyPolygon("development has fewer than two finite points");

    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }

    NewtonPolygon poly;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        auto [x0, y0] = hull[i];
        auto [x1, y1] = hull[i + 1];
        if (y1 >= y0) break;  // slopes only increase; the principal part is over
        Side s;
        s.x0 = x0; s.y0 = y0; s.x1 = x1; s.y1 = y1;
        long g = std::gcd(y0 - y1, x1 - x0);
        s.h = (y0 - y1) / g;
        s.e = (x1 - x0) / g;
        s.length = x1 - x0;
        s.degree = g;
        if (poly.vertices.empty()) poly.vertices.push_back(hull[i]);
        poly.vertices.push_back(hull[i + 1]);
        poly.sides.push_back(s);
    }
    if (poly.sides.empty())
        throw EmptyPolygon("no negative-slope side: the constant coefficient is a unit");
    return poly;
}

ResidualPoly residual_poly(const Development& dev, const Side& side) {
    long pl = to_long(dev.p);
    bool linear_phi = dev.phi.degree() == 1;
    std::vector<long> cs(static_cast<size_t>(side.degree) + 1, 0);
    Z pv;
    for (long j = 0; j <= side.degree; ++j) {
        long i = side.x0 + j * side.e;
        if (static_cast<size_t>(i) >= dev.coeffs.size()) throw RangeError("side beyond development");
        if (dev.valuations[static_cast<size_t>(i)].is_infinite) continue;
        long v = static_cast<long>(dev.valuations[static_cast<size_t>(i)].value);
        // on the side iff (v - y0)*(x1 - x0) == (y1 - y0)*(i - x0); above contributes 0
        long long lhs = static_cast<long long>(v - side.y0) * (side.x1 - side.x0);
        long long rhs = static_cast<long long>(side.y1 - side.y0) * (i - side.x0);
        if (lhs != rhs) continue;
        mpz_pow_ui(pv.get_mpz_t(), dev.p.get_mpz_t(), static_cast<unsigned long>(v));
        const IntPoly& ai = dev.coeffs[static_cast<size_t>(i)];
        std::vector<Z> scaled(ai.c.size());
        for (size_t t = 0; t < ai.c.size(); ++t)
            mpz_divexact(scaled[t].get_mpz_t(), ai.c[t].get_mpz_t(), pv.get_mpz_t());
        FpPoly residue = FpPoly::from_integer_coeffs(pl, scaled);
        if (residue.degree() > 0) {
            if (linear_phi) throw InternalError("non-constant residue under a linear phi");
            throw ExtensionCoefficients(
                "residual coefficient lies outside the prime field (phi is nonlinear)");
        }
        cs[static_cast<size_t>(j)] = residue.coeff(0);
    }
    ResidualPoly out{side, FpPoly(pl, std::move(cs))};
    if (out.poly.degree() != side.degree || out.poly.coeff(0) == 0)
        throw InternalError("residual polynomial lost a vertex coefficient");
    return out;
}

// --- first dissection ------------------------------------------------------

OreResult ore_factorize(const Z& n, const Z& a, const Z& p, std::uint64_t seed) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw RangeError("first dissection is implemented for odd primes");
    long nl = to_long(n);
    long pl = to_long(p);

    OreResult res;
    res.decomposition.p = p;
    res.decomposition.labeling = "newton-sides";
    {
        // informational case tag, same table as the closed-form classifier
        bool pa = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t());
        bool pn = mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t());
        if (pa) {
            unsigned long v = vp_finite(a, p);
            res.decomposition.kase = (!pn || v % to_ulong(p) != 0) ? SplitCase::TameRadicand
                                                                   : SplitCase::Deep;
        } else {
            res.decomposition.kase = pn ? SplitCase::WildIndex : SplitCase::Unramified;
        }
    }

    FactorMultiset fm = factor_fp(FpPoly::xn_minus_c(pl, nl, a), seed);
    IntPoly f = IntPoly::xn_minus_a(nl, a);

    int phi_idx = 0;
    for (const auto& [phibar, mult] : fm.factors) {
        ++phi_idx;
        std::string base = "phi" + std::to_string(phi_idx);
        long fdeg = phibar.degree();
        if (mult == 1) {
            // simple factor: Hensel gives one unramified prime directly
            res.decomposition.factors.push_back({Z(1), fdeg, 1, base});
            continue;
        }
        Development dev = develop(f, IntPoly::from_fp(phibar), p);
        NewtonPolygon poly = principal_polygon(dev);
        long span = 0;
        for (const auto& s : poly.sides) span += s.length;
        if (static_cast<unsigned long>(span) != mult)
            throw InternalError("principal polygon does not span the factor multiplicity");
        int side_idx = 0;
        for (const auto& side : poly.sides) {
            ++side_idx;
            std::string slabel = base + ".S" + std::to_string(side_idx);
            if (side.degree == 1) {
                // one prime, residual is linear over the residue extension
                res.decomposition.factors.push_back({Z(side.e), fdeg, 1, slabel});
                continue;
            }
            if (fdeg > 1) {
                res.status = OreStatus::ExtensionCoefficients;
                res.detail = "side of degree " + std::to_string(side.degree) +
                             " over a nonlinear phi needs factorization over an extension field";
                return res;
            }
            ResidualPoly rp = residual_poly(dev, side);
            if (!is_separable(rp.poly)) {
                res.status = OreStatus::RequiresFurtherDissection;
                res.detail = "inseparable residual polynomial " + rp.poly.str('y') +
                             " on side of slope -" + std::to_string(side.h) + "/" +
                             std::to_string(side.e);
                return res;
            }
            FactorMultiset rf = factor_fp(rp.poly, seed);
            int gamma_idx = 0;
            for (const auto& [gamma, gmult] : rf.factors) {
                ++gamma_idx;
                if (gmult != 1) throw InternalError("separable residual produced a repeated factor");
                res.decomposition.factors.push_back(
                    {Z(side.e), gamma.degree(), 1, slabel + ".g" + std::to_string(gamma_idx)});
            }
        }
    }

    if (res.decomposition.degree_sum() != n)
        throw InternalError("dissection lost degree: sum(e*f) != n");
    return res;
}

}  // namespace radsplit
