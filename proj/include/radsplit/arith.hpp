#pragma once

#include <optional>

#include "radsplit/errors.hpp"
#include "radsplit/integer.hpp"

namespace radsplit {

/// p-adic valuation. `is_infinite` is set exactly when the valuated
/// integer was 0; otherwise p^value | x and p^(value+1) does not.
struct PValuation {
    unsigned long value = 0;
    bool is_infinite = false;

    friend bool operator==(const PValuation&, const PValuation&) = default;
};

PValuation vp(const Z& x, const Z& p);

/// Like vp but throws ZeroValuation instead of returning the infinite flag.
unsigned long vp_finite(const Z& x, const Z& p);

/// v_p(binomial(p^m, b)) for 0 <= b <= p^m. Closed form: m - v_p(b) away
/// from the endpoints, 0 at them. Throws RangeError outside [0, p^m].
unsigned long vp_binom(unsigned long m, const Z& b, const Z& p);

/// v_p(binomial(n, i)) for any 0 <= i <= n, via base-p digit sums.
unsigned long vp_binomial(const Z& n, const Z& i, const Z& p);

enum class LiftSchedule { Doubling, Increment };

struct WieferichVal {
    unsigned long w = 0;                      // v_p(a^p - a) for p coprime to a
    unsigned long modulus_exponent_used = 0;  // lifting depth K that decided it
};

/// Valuation of the Wieferich difference a^p - a, equal to v_p(a^(p-1) - 1)
/// when p does not divide a. Computed with residues mod p^K for growing K;
/// a^p itself is never materialized. Throws DivisibleBase if p | a and
/// WieferichOverflow once K would exceed `cap` (a in {1, -1} never resolves).
WieferichVal wieferich(const Z& a, const Z& p, unsigned long cap = 4096,
                       LiftSchedule schedule = LiftSchedule::Doubling);

/// v = h * p^k with p coprime to h.
struct ValSplit {
    unsigned long h = 0;
    unsigned long k = 0;

    friend bool operator==(const ValSplit&, const ValSplit&) = default;
};

ValSplit split_valuation(unsigned long v, const Z& p);

/// Euler phi of p^j; 1 when j = 0.
Z euler_phi_pk(const Z& p, unsigned long j);

/// Exact integer q-th root when one exists (negative roots allowed for
/// odd q), otherwise nullopt. Never uses floating point.
std::optional<Z> qth_root(const Z& a, const Z& q);

}  // namespace radsplit
