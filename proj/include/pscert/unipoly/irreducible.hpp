#pragma once

// Irreducibility over Q from factorization patterns modulo several primes.
//
// If f factors over Q as g*h with 0 < deg g < deg f, then for every prime p
// not dividing lc(f) the degree deg g is a sum of a sub-multiset of the
// degrees of the irreducible factors of f mod p. Intersecting those subset
// sums over many primes and finding only {0, deg f} proves irreducibility.

#include <cstdint>
#include <string>
#include <vector>

#include "pscert/unipoly/factor_modp.hpp"

namespace pscert {

enum class IrreducibilityVerdict { Irreducible, Inconclusive };

inline std::string to_string(IrreducibilityVerdict v) {
    return v == IrreducibilityVerdict::Irreducible ? "Irreducible" : "Inconclusive";
}

struct IrreducibilityCertificate {
    ZPoly polynomial;
    std::vector<std::uint64_t> primes;
    std::vector<std::vector<int>> degree_patterns;  // sorted factor degrees per prime
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
};

constexpr std::uint64_t irreducibility_first_prime = (1ULL << 30) + 1;
constexpr int irreducibility_default_budget = 64;

namespace detail {

inline std::vector<char> subset_sums(const std::vector<int>& degrees, int total) {
    std::vector<char> s(static_cast<std::size_t>(total) + 1, 0);
    s[0] = 1;
    for (int d : degrees)
        for (int v = total; v >= d; --v)
            if (s[static_cast<std::size_t>(v - d)]) s[static_cast<std::size_t>(v)] = 1;
    return s;
}

}  // namespace detail

/// Degree pattern of f mod p (f squarefree mod p, p not dividing lc).
inline std::vector<int> degree_pattern(const ZPoly& f, std::uint64_t p) {
    std::vector<int> out;
    for (const auto& fac : factor_mod_p(reduce_mod(f, p)).factors)
        for (int i = 0; i < fac.multiplicity; ++i) out.push_back(fac.factor.degree());
    return out;
}

/// Uses `budget` good primes above 2^30 and stops early once the subset-sum
/// intersection collapses to {0, deg f}. Sound for Irreducible; Inconclusive
/// carries no claim.
inline IrreducibilityCertificate certify_irreducible(const ZPoly& f, int budget = irreducibility_default_budget) {
    if (f.degree() < 1) throw DomainError("certify_irreducible needs degree >= 1");
    if (content(f) != 1) throw DomainError("certify_irreducible needs a primitive polynomial");
    if (gcd(f, f.derivative()).degree() > 0) throw DomainError("certify_irreducible needs a squarefree polynomial");
    IrreducibilityCertificate cert{f, {}, {}, IrreducibilityVerdict::Inconclusive};
    const int n = f.degree();
    if (n == 1) {
        cert.verdict = IrreducibilityVerdict::Irreducible;
        return cert;
    }
    std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
    std::uint64_t p = irreducibility_first_prime;
    while (static_cast<int>(cert.primes.size()) < budget) {
        p = next_prime(p + 1);
        if (mod_of(f.lc(), p) == 0) continue;
        FpPoly fp = reduce_mod(f, p);
        if (gcd(fp, fp.derivative()).degree() > 0) continue;  // p divides the discriminant
        std::vector<int> pattern = degree_pattern(f, p);
        cert.primes.push_back(p);
        cert.degree_patterns.push_back(pattern);
        auto sums = detail::subset_sums(pattern, n);
        int survivors = 0;
        for (int k = 0; k <= n; ++k) {
            alive[static_cast<std::size_t>(k)] &= sums[static_cast<std::size_t>(k)];
            survivors += alive[static_cast<std::size_t>(k)];
        }
        if (survivors == 2) {
            cert.verdict = IrreducibilityVerdict::Irreducible;
            break;
        }
    }
    return cert;
}

}  // namespace pscert
