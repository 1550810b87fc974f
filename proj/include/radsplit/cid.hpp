#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radsplit/decomposition.hpp"
#include "radsplit/splitting.hpp"

namespace radsplit {

enum class CidVerdict { No, Yes, Undetermined };
enum class CidMethod { HenselCount, ClosedFormWild, ClosedFormDeep, NeverByCase };

const char* to_string(CidVerdict v);
const char* to_string(CidMethod m);

/// The residue degree whose prime count beats the number of monic
/// irreducibles of that degree.
struct CidWitness {
    long f = 0;
    long prime_count = 0;
    Z irreducible_count;

    friend bool operator==(const CidWitness&, const CidWitness&) = default;
};

struct CidReport {
    Z p;
    CidVerdict verdict = CidVerdict::No;
    std::optional<CidWitness> witness;        // present iff verdict is Yes
    std::optional<CidMethod> method;          // absent only for Undetermined
    friend bool operator==(const CidReport&, const CidReport&) = default;
};

/// Hensel's counting criterion applied to a decomposition: p is a common
/// index divisor iff some residue degree f has more primes than there are
/// monic irreducibles of degree f over F_p. The witness reports the
/// smallest such f.
CidReport is_cid_hensel(const Decomposition& decomp);

/// Closed form for the wild case: min(w, m+1) * d_f > Irred(f, p) for
/// some f, with d_f counted from x^n0 - a mod p. Throws WrongCase if the
/// input is not in the wild case.
CidReport is_cid_closed_wild(const RadicalInput& input, const Z& p,
                             std::uint64_t seed = kDefaultFactorSeed);

/// Closed form for the deep case: d_{f,0} + min(w0-1, k, m) * d_f >
/// Irred(f, p) for some f.
CidReport is_cid_closed_deep(const RadicalInput& input, const Z& p,
                             std::uint64_t seed = kDefaultFactorSeed);

/// Verdict for every prime dividing n (no other prime can be a common
/// index divisor). Odd primes are decided by the Hensel count on the
/// closed-form splitting, cross-checked against the closed-form test
/// where one applies (a mismatch is a hard InternalError). Tame-radicand
/// and unramified primes are never common index divisors. p = 2 dividing
/// n outside the tame case is reported Undetermined.
std::vector<CidReport> enumerate_cids(const RadicalInput& input,
                                      std::uint64_t seed = kDefaultFactorSeed);

}  // namespace radsplit
