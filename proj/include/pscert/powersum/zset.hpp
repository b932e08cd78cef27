#pragma once

// Common-zero sets of the affine systems 1 + x^k + y^k = 0, k in the
// exponent list. Solutions with x in {0, -1, w, w^2} are "trivial" and are
// decided by divisibility rules; everything else is described by a monic
// polynomial over Q whose roots are exactly the remaining x-coordinates.

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "pscert/powersum/pq.hpp"
#include "pscert/unipoly/quotient.hpp"

namespace pscert {

struct TrivialFlags {
    bool zero_minus_one = false;  // x in {0, -1}
    bool cube_roots = false;      // x in {w, w^2}
    bool any() const { return zero_minus_one || cube_roots; }
    friend bool operator==(const TrivialFlags&, const TrivialFlags&) = default;
};

struct ZSet {
    std::vector<long> exponents;
    QPoly defining;  // monic; the constant 1 when there are no nontrivial zeros
    TrivialFlags trivial;
    bool nontrivial_empty() const { return defining.degree() == 0; }
};

/// Triple check that could not be resolved within the work budget.
struct CandidateReport {
    std::vector<long> exponents;
    std::vector<QPoly> surviving_factors;
    std::string reason;
};

/// Flags from divisibility alone: {0,-1} iff every exponent is odd,
/// {w,w^2} iff no exponent is divisible by 3.
inline TrivialFlags trivial_flags(const std::vector<long>& exps) {
    TrivialFlags f{true, true};
    for (long e : exps) {
        if (e % 2 == 0) f.zero_minus_one = false;
        if (e % 3 == 0) f.cube_roots = false;
    }
    return f;
}

/// Z(b, c) for the a = 1 system, i.e. common roots of P_b and P_c.
inline ZSet pair_zset(long b, long c) {
    if (b < 2 || c <= b) throw DomainError("pair_zset needs 2 <= b < c");
    auto qb = build_pq(static_cast<int>(b)), qc = build_pq(static_cast<int>(c));
    ZSet z;
    z.exponents = {b, c};
    z.defining = gcd(qb.Q, qc.Q);
    z.trivial = trivial_flags({1, b, c});
    return z;
}

/// (1 + x^a)^b - (-1)^(a+b) (1 + x^b)^a: eliminates y from the a- and
/// b-equations.
inline ZPoly triple_eliminant(long a, long b) {
    const ZPoly one(Integer(1));
    ZPoly xa = ZPoly::monomial(Integer(1), static_cast<std::size_t>(a)) + one;
    ZPoly xb = ZPoly::monomial(Integer(1), static_cast<std::size_t>(b)) + one;
    ZPoly lhs = xa.pow(static_cast<unsigned long>(b));
    ZPoly rhs = xb.pow(static_cast<unsigned long>(a));
    return (a + b) % 2 == 0 ? lhs - rhs : lhs + rhs;
}

/// Removes every factor x, x+1, x^2+x+1 (with multiplicity).
inline ZPoly strip_trivial(ZPoly f) {
    for (const ZPoly& t : {poly_x_z(), poly_x_plus_1(), poly_cyclotomic3()})
        while (f.degree() > 0 && divides(t, f)) f = exact_div(f, t);
    return f;
}

/// y-polynomial 1 + x^k + y^k with coefficients in K[x].
template <class T>
YPoly<T> fermat_ypoly(long k, const T& like) {
    YPoly<T> f(static_cast<std::size_t>(k) + 1);
    const T one = one_like(like);
    f[0] = Poly<T>::monomial(one, static_cast<std::size_t>(k)) + Poly<T>(one);
    f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] + Poly<T>(one);
    return f;
}

constexpr int triple_residual_degree_limit = 64;

using TripleResult = std::variant<ZSet, CandidateReport>;

/// Z(a, b, c): eliminant gcd, trivial stripping, then an exact check that a
/// common y exists over each root of the residual.
inline TripleResult triple_zset(long a, long b, long c) {
    if (a < 2 || b <= a || c <= b) throw DomainError("triple_zset needs 2 <= a < b < c");
    if (std::gcd(std::gcd(a, b), c) != 1) throw DomainError("triple_zset needs gcd(a, b, c) = 1");
    ZSet z;
    z.exponents = {a, b, c};
    z.trivial = trivial_flags(z.exponents);
    ZPoly g = gcd(gcd(triple_eliminant(a, b), triple_eliminant(a, c)), triple_eliminant(b, c));
    ZPoly residual = strip_trivial(primitive_part(g));
    if (residual.degree() <= 0) {
        z.defining = QPoly(Rational(1));
        return z;
    }
    ZPoly q = squarefree_part(residual);
    if (q.degree() > triple_residual_degree_limit)
        return CandidateReport{z.exponents, {make_monic(to_rational(q))}, "residual degree above the quotient-ring budget"};
    const Rational one(1);
    auto branches = ygcd_over_quotient(make_monic(to_rational(q)),
                                       {fermat_ypoly(a, one), fermat_ypoly(b, one), fermat_ypoly(c, one)});
    QPoly defining(one);
    for (const auto& br : branches)
        if (br.gcd.size() >= 2) defining = defining * br.modulus;
    z.defining = make_monic(defining);
    return z;
}

}  // namespace pscert
