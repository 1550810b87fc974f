#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radsplit {

/// Arbitrary-precision integer. All exact arithmetic in the library goes
/// through this type; no floating point decides anything.
using Z = mpz_class;

inline Z zpow(const Z& base, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Z zpowm(const Z& base, const Z& exp, const Z& mod) {
    Z r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline bool fits_long(const Z& x) { return x.fits_slong_p(); }

inline long to_long(const Z& x) {
    if (!x.fits_slong_p())
        throw std::overflow_error("integer does not fit in a machine word: " + x.get_str());
    return x.get_si();
}

inline unsigned long to_ulong(const Z& x) {
    if (sgn(x) < 0 || !x.fits_ulong_p())
        throw std::overflow_error("integer does not fit in an unsigned machine word: " + x.get_str());
    return x.get_ui();
}

inline std::string to_string(const Z& x) { return x.get_str(); }

inline bool is_probable_prime(const Z& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace radsplit
