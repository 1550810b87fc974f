#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "radsplit/arith.hpp"
#include "radsplit/decomposition.hpp"
#include "radsplit/fppoly.hpp"
#include "radsplit/integer.hpp"

namespace radsplit {

/// Dense polynomial with integer coefficients, lowest degree first,
/// trailing zeros trimmed. Only what the dissection engine needs.
struct IntPoly {
    std::vector<Z> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Z> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly xn_minus_a(long n, const Z& a);
    static IntPoly linear(const Z& r);  // x - r
    static IntPoly from_fp(const FpPoly& f);  // canonical lift, coefficients in [0, p)

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Z& coeff(long i) const;
    void trim();

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    /// Euclidean division by a monic divisor; exact over the integers.
    static std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

    std::string str(char var = 'x') const;
};

/// phi-adic development f = sum a_i(x) phi(x)^i with deg a_i < deg phi,
/// together with the Gauss valuation of each coefficient.
struct Development {
    IntPoly f;
    IntPoly phi;
    Z p;
    std::vector<IntPoly> coeffs;
    std::vector<PValuation> valuations;
};

/// Exact repeated euclidean division by monic phi. For f = x^N - a with
/// linear phi the binomial coefficients are produced incrementally and
/// their valuations come from digit sums instead of trial division.
Development develop(const IntPoly& f, const IntPoly& phi, const Z& p);

/// One negative-slope side of the lower hull. The slope is -h/e in lowest
/// terms; degree = length / e is always an integer.
struct Side {
    long x0 = 0, y0 = 0;
    long x1 = 0, y1 = 0;
    long h = 0, e = 1;
    long length = 0;
    long degree = 0;

    friend bool operator==(const Side&, const Side&) = default;
};

struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;
    std::vector<Side> sides;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Negative-slope part of the lower convex hull of the development points
/// (i, v_p(a_i)); points with infinite valuation are skipped. Throws
/// EmptyPolygon when there is no principal part (v_p(a_0) = 0).
NewtonPolygon principal_polygon(const Development& dev);

struct ResidualPoly {
    Side side;
    FpPoly poly;  // in y, over F_p
};

/// Residual polynomial of a side: coefficients read at the lattice points
/// on the side, a_i / p^{v(a_i)} reduced mod (p, phi). Only the prime-field
/// case is materialized; a nonlinear phi whose on-side residues are not
/// constants throws ExtensionCoefficients.
ResidualPoly residual_poly(const Development& dev, const Side& side);

enum class OreStatus { Ok, RequiresFurtherDissection, ExtensionCoefficients };

const char* to_string(OreStatus s);

struct OreResult {
    OreStatus status = OreStatus::Ok;
    Decomposition decomposition;  // meaningful only when status == Ok
    std::string detail;
};

/// First-dissection factorization of (p) in Q(n-th root of a) for odd p:
/// factor x^n - a mod p, develop at a canonical lift of each repeated
/// irreducible factor, and read the decomposition off the polygon sides.
/// Sides whose residual polynomial is inseparable, or would need
/// extension-field coefficients, make the engine refuse rather than guess.
/// Precondition: x^n - a irreducible over Q.
OreResult ore_factorize(const Z& n, const Z& a, const Z& p,
                        std::uint64_t seed = kDefaultFactorSeed);

}  // namespace radsplit
