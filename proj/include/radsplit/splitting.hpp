#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "radsplit/decomposition.hpp"
#include "radsplit/fppoly.hpp"
#include "radsplit/integer.hpp"

namespace radsplit {

/// Witness that x^n - a is reducible: either a = root^q for a prime q | n,
/// or a = -4 t^4 with 4 | n.
struct Reducible {
    std::optional<Z> q;
    std::optional<Z> root;
    std::optional<Z> sophie_t;

    friend bool operator==(const Reducible&, const Reducible&) = default;
};

/// The pair (n, a) defining x^n - a, certified irreducible over Q at
/// construction. Only check_irreducible can build one.
class RadicalInput {
public:
    const Z& n() const { return n_; }
    const Z& a() const { return a_; }

private:
    RadicalInput(Z n, Z a) : n_(std::move(n)), a_(std::move(a)) {}
    friend std::variant<RadicalInput, Reducible> check_irreducible(const Z&, const Z&);

    Z n_, a_;
};

/// Accepts iff a is not a q-th power for any prime q | n, and (when 4 | n)
/// a != -4 t^4. Rejection is a value carrying the witness, not an error.
std::variant<RadicalInput, Reducible> check_irreducible(const Z& n, const Z& a);

SplitCase classify(const Z& n, const Z& a, const Z& p);
SplitCase classify(const RadicalInput& input, const Z& p);

// The per-case splittings. These take raw (n, a, p) so each branch can be
// exercised directly; classify() decides which one applies and split()
// dispatches. Irreducibility of x^n - a is the caller's responsibility.

/// p coprime to n*a: the splitting mirrors the factorization of x^n - a
/// in F_p[x], every exponent 1.
Decomposition split_unramified(const Z& n, const Z& a, const Z& p,
                               std::uint64_t seed = kDefaultFactorSeed);

/// p | a with p not dividing gcd(v_p(a), n) (p = 2 allowed): with
/// g = gcd(v_p(a), n), every prime has e = n/g and the residue degrees
/// mirror y^g - a/p^{v_p(a)} in F_p[y].
Decomposition split_tame_radicand(const Z& n, const Z& a, const Z& p,
                                  std::uint64_t seed = kDefaultFactorSeed);

/// Odd p | n with p coprime to a: for each irreducible factor of
/// x^{n0} - a mod p of degree f there are primes of residue degree f with
/// e = p^(m-b) and e = phi(p^j), j = m-b+1..m.
Decomposition split_wild_index(const Z& n, const Z& a, const Z& p,
                               std::uint64_t seed = kDefaultFactorSeed);

/// The intermediate p-power level: odd p, x^(p^m) - a irreducible, p | a
/// and p | v_p(a). Emits (p^(m-c), 1) and (p^(m-c)*phi(p^i), 1) for
/// i = 1..c; residue degrees are all 1 over Q at this level.
Decomposition split_ppower_deep(unsigned long m, const Z& a, const Z& p);

/// Odd p dividing n, a and v_p(a): ramification indices
/// p^(m-c)*n0/g0 (mirroring y^g0 - a0) and p^(m-c)*phi(p^i)*n0/g for
/// i = 1..c (mirroring y^g - (-1)^h a0).
Decomposition split_deep(const Z& n, const Z& a, const Z& p,
                         std::uint64_t seed = kDefaultFactorSeed);

/// Dispatcher over classify(). Throws UnsupportedEvenPrime for p = 2
/// dividing n outside the TameRadicand case; never guesses there.
Decomposition split(const RadicalInput& input, const Z& p,
                    std::uint64_t seed = kDefaultFactorSeed);

}  // namespace radsplit
