#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radsplit/errors.hpp"
#include "radsplit/integer.hpp"

namespace radsplit {

/// Dense polynomial over the prime field F_p. Coefficients are residues in
/// [0, p), stored lowest degree first with trailing zeros trimmed.
class FpPoly {
public:
    FpPoly() = default;  // modulus 0: only valid as a container placeholder
    explicit FpPoly(long p) : p_(p) { check_modulus(); }
    FpPoly(long p, std::vector<long> coeffs);

    static FpPoly zero(long p) { return FpPoly(p); }
    static FpPoly constant(long p, const Z& c);
    static FpPoly x(long p) { return FpPoly(p, {0, 1}); }
    /// x^n - c reduced mod p.
    static FpPoly xn_minus_c(long p, long n, const Z& c);
    static FpPoly from_integer_coeffs(long p, const std::vector<Z>& coeffs);

    long modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    long coeff(long i) const;
    long leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<long>& coeffs() const { return c_; }

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b);

    /// Euclidean division; divisor must be nonzero and share the modulus.
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

    FpPoly derivative() const;
    FpPoly monic() const;  // scaled by the inverse of the leading coefficient
    FpPoly scaled(long c) const;
    long eval(long v) const;

    /// Ordering used everywhere factor lists must be reproducible:
    /// by degree, then lexicographic on the coefficient list.
    static bool canonical_less(const FpPoly& a, const FpPoly& b);

    std::string str(char var = 'x') const;

private:
    void check_modulus() const;
    void trim();

    long p_ = 0;
    std::vector<long> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly powmod(FpPoly base, Z exp, const FpPoly& mod);

/// true iff gcd(f, f') = 1 (nonconstant f with vanishing derivative is
/// inseparable in characteristic p).
bool is_separable(const FpPoly& f);

/// Complete factorization into monic irreducibles: unit * prod factor^mult.
struct FactorMultiset {
    long p = 0;
    long unit = 1;
    std::vector<std::pair<FpPoly, unsigned long>> factors;

    FpPoly product() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ULL;

/// Squarefree decomposition + distinct-degree splitting + randomized
/// equal-degree splitting (Cantor-Zassenhaus; trace maps for p = 2).
/// Output ordering is canonical so results do not depend on the generator,
/// which is passed explicitly.
FactorMultiset factor_fp(const FpPoly& f, std::mt19937_64& rng);
FactorMultiset factor_fp(const FpPoly& f, std::uint64_t seed = kDefaultFactorSeed);

/// Count of distinct irreducible factors per degree, multiplicity ignored.
std::map<long, long> degree_distribution(const FactorMultiset& fm);

/// Number of monic irreducible polynomials of degree f over F_p:
/// (1/f) * sum_{d | f} mu(f/d) p^d.
Z irred_count(unsigned long f, const Z& p);

}  // namespace radsplit
