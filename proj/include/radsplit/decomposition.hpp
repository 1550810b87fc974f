#pragma once

#include <string>
#include <variant>
#include <vector>

#include "radsplit/integer.hpp"

namespace radsplit {

/// Which branch of the case analysis a prime falls into. The five cases are
/// mutually exclusive and exhaustive.
enum class SplitCase {
    Unramified,       // p coprime to n*a
    TameRadicand,     // p | a, and p does not divide n or does not divide v_p(a)
    WildIndex,        // p | n, p coprime to a, p odd
    Deep,             // p | n, p | a, p | v_p(a), p odd
    UnsupportedEven,  // p = 2 dividing n, outside the TameRadicand case
};

const char* to_string(SplitCase c);

/// One group of primes above p sharing (e, f) and provenance. `label`
/// names the ideal(s) in the same scheme the corresponding theorem uses.
struct FactorGroup {
    Z e;
    long f = 0;
    long count = 1;
    std::string label;

    friend bool operator==(const FactorGroup&, const FactorGroup&) = default;
};

struct TameParams {
    unsigned long v = 0;  // v_p(a)
    Z g;                  // gcd(v, n)
    Z e;                  // n / g, the shared ramification index
    Z a0;                 // a / p^v

    friend bool operator==(const TameParams&, const TameParams&) = default;
};

struct WildParams {
    unsigned long m = 0;  // v_p(n)
    Z n0;                 // n / p^m
    unsigned long w = 0;  // Wieferich difference valuation of a
    unsigned long b = 0;  // min(w - 1, m)

    friend bool operator==(const WildParams&, const WildParams&) = default;
};

struct DeepParams {
    Z a0;                  // a / p^(h*p^k)
    unsigned long h = 0;   // coprime part of v_p(a)
    unsigned long k = 0;   // v_p(v_p(a))
    unsigned long m = 0;   // v_p(n)
    Z n0;                  // n / p^m
    unsigned long w0 = 0;  // Wieferich difference valuation of a0
    unsigned long c = 0;   // min(w0 - 1, k, m)
    Z g0;                  // gcd(n0, h)
    Z g;                   // gcd(n0, h*(p-1))

    friend bool operator==(const DeepParams&, const DeepParams&) = default;
};

using CaseParams = std::variant<std::monostate, TameParams, WildParams, DeepParams>;

/// Shape of the prime ideal factorization of (p): a list of groups with
/// ramification index e, residue class degree f and multiplicity count.
/// The fundamental identity sum(e*f*count) = n holds for every instance.
struct Decomposition {
    Z p;
    SplitCase kase = SplitCase::Unramified;
    std::vector<FactorGroup> factors;
    CaseParams params;
    std::string labeling;  // which ideal-naming convention the labels follow

    Z degree_sum() const {
        Z s = 0;
        for (const auto& g : factors) s += g.e * g.f * g.count;
        return s;
    }

    /// (e, f) pairs with counts expanded, sorted; the representation used
    /// for equality of splitting shapes.
    std::vector<std::pair<Z, long>> ef_multiset() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

}  // namespace radsplit
