#pragma once

// Factorization over prime fields: squarefree decomposition, distinct-degree
// splitting, and Cantor-Zassenhaus equal-degree splitting.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pscert/unipoly/gcd.hpp"

namespace pscert {

struct FpFactor {
    FpPoly factor;  // monic irreducible
    int multiplicity = 1;
};

struct FpFactorization {
    Fp unit;
    std::vector<FpFactor> factors;  // sorted by degree, then coefficients
};

/// base^e mod m over F_p.
inline FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) {
    FpPoly result(one_like(m.lc()));
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * base, m);
    }
    return result;
}

inline FpPoly poly_x(std::uint64_t p) { return FpPoly({Fp(0, p), Fp(1, p)}); }

namespace detail {

inline bool is_one(const FpPoly& f) { return f.degree() == 0 && f.lc().residue() == 1; }

// f(x) = g(x^p) -> g(x); valid over F_p because a^(1/p) = a.
inline FpPoly pth_root(const FpPoly& f, std::uint64_t p) {
    std::vector<Fp> c;
    for (std::size_t i = 0; i < f.size(); i += p) c.push_back(f.coeffs()[i]);
    return FpPoly(std::move(c));
}

inline void squarefree_decomposition(const FpPoly& f, int mult, std::uint64_t p, std::vector<FpFactor>& out) {
    if (f.degree() <= 0) return;
    FpPoly c = gcd(f, f.derivative());
    FpPoly w = divrem(f, c).quotient;
    int i = 1;
    while (!is_one(w) && w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly fac = divrem(w, y).quotient;
        if (fac.degree() > 0) out.push_back({make_monic(fac), i * mult});
        w = y;
        c = divrem(c, y).quotient;
        ++i;
    }
    if (c.degree() > 0) squarefree_decomposition(make_monic(pth_root(c, p)), mult * static_cast<int>(p), p, out);
}

// Splits a squarefree monic f into (product of degree-d factors, d) pairs.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, std::uint64_t p) {
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x = poly_x(p);
    FpPoly h = x;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g).quotient;
            h = rem(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(make_monic(f), f.degree());
    return out;
}

inline void equal_degree(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (g.degree() == d) {
        out.push_back(make_monic(g));
        return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    const Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    for (;;) {
        std::vector<Fp> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = Fp(coeff(rng), p);
        FpPoly a(std::move(c));
        if (a.degree() <= 0) continue;
        FpPoly b = powmod(a, e, g) - FpPoly(Fp(1, p));
        if (b.zero()) continue;
        FpPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, p, rng, out);
            equal_degree(divrem(g, h).quotient, d, p, rng, out);
            return;
        }
    }
}

inline bool coeff_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto x = a.coeffs()[static_cast<std::size_t>(i)].residue(), y = b.coeffs()[static_cast<std::size_t>(i)].residue();
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace detail

/// Complete factorization of a nonzero polynomial over F_p, p odd.
/// Deterministic: the equal-degree splitter uses a fixed seed.
inline FpFactorization factor_mod_p(const FpPoly& f) {
    if (f.zero()) throw DomainError("factor_mod_p of zero");
    const std::uint64_t p = f.lc().modulus();
    if (p == 2) throw BadPrime("factor_mod_p requires an odd prime");
    FpFactorization result{f.lc(), {}};
    if (f.degree() == 0) return result;
    std::vector<FpFactor> sqf;
    detail::squarefree_decomposition(make_monic(f), 1, p, sqf);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p ^ (static_cast<std::uint64_t>(f.degree()) << 32));
    for (const auto& part : sqf) {
        for (const auto& [g, d] : detail::distinct_degree(part.factor, p)) {
            std::vector<FpPoly> pieces;
            detail::equal_degree(g, d, p, rng, pieces);
            for (auto& q : pieces) result.factors.push_back({std::move(q), part.multiplicity});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (detail::coeff_less(a.factor, b.factor)) return true;
        if (detail::coeff_less(b.factor, a.factor)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

/// Rabin's test: q of degree d is irreducible over F_p iff x^(p^d) = x mod q
/// and gcd(x^(p^(d/l)) - x, q) = 1 for each prime l | d.
inline bool is_irreducible_mod_p(const FpPoly& q) {
    const int d = q.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const std::uint64_t p = q.lc().modulus();
    const FpPoly x = poly_x(p);
    auto frob = [&](int k) {
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(k));
        return powmod(x, e, q);
    };
    if (!(rem(frob(d) - x, q).zero())) return false;
    int n = d;
    for (int l = 2; l <= n; ++l) {
        if (n % l) continue;
        while (n % l == 0) n /= l;
        if (gcd(q, frob(d / l) - x).degree() > 0) return false;
    }
    return true;
}

}  // namespace pscert
