#pragma once

// Greatest common divisors, resultants and squarefree parts.
//
// Over Q everything is routed through primitive integer polynomials and the
// subresultant remainder sequence, so results never depend on random choices
// or modular reconstruction.

#include <utility>

#include "pscert/unipoly/poly.hpp"

namespace pscert {

template <class T>
T power(const T& base, unsigned long n) {
    T result = one_like(base);
    T b = base;
    while (n) {
        if (n & 1) result = result * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return result;
}

/// Gcd in Z[x] by the subresultant PRS; positive leading coefficient.
inline ZPoly gcd(const ZPoly& f, const ZPoly& g) {
    if (f.zero()) return primitive_part(g) * content(g);
    if (g.zero()) return primitive_part(f) * content(f);
    ZPoly a = f, b = g;
    if (a.degree() < b.degree()) std::swap(a, b);
    Integer d = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    Integer sg = 1, sh = 1;
    for (;;) {
        const unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
        ZPoly r = prem(a, b);
        if (r.zero()) return primitive_part(b) * d;
        if (r.degree() == 0) return ZPoly(d);
        a = b;
        b = r.exact_div_scalar(sg * power(sh, delta));
        sg = a.lc();
        if (delta == 0) {
            // sh unchanged
        } else if (delta == 1) {
            sh = sg;
        } else {
            sh = exact_div(power(sg, delta), power(sh, delta - 1));
        }
    }
}

/// Monic gcd over Q.
inline QPoly gcd(const QPoly& f, const QPoly& g) {
    if (f.zero() && g.zero()) throw DomainError("gcd(0, 0) is undefined");
    ZPoly h = gcd(primitive_integer(f), primitive_integer(g));
    QPoly out = make_monic(to_rational(h));
    if (!divides(out, f) || !divides(out, g)) throw DivisionFailure("gcd does not divide its inputs");
    return out;
}

/// Monic gcd over F_p (Euclid).
inline FpPoly gcd(FpPoly a, FpPoly b) {
    if (a.zero() && b.zero()) throw DomainError("gcd(0, 0) is undefined");
    if (!a.zero() && !b.zero() && a.lc().modulus() != b.lc().modulus())
        throw RingMismatch("gcd over different prime fields");
    while (!b.zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Resultant over an integral domain (subresultant algorithm, exact
/// divisions only). Works for scalar coefficients and for coefficients that
/// are themselves polynomials, which gives bivariate elimination.
template <class T>
T resultant(const Poly<T>& f, const Poly<T>& g) {
    if (f.zero() || g.zero()) return T{};
    Poly<T> a = f, b = g;
    T sign = one_like(a.lc());
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    if (b.degree() == 0) return sign * power(b.lc(), static_cast<unsigned long>(a.degree()));
    T sg = one_like(a.lc()), sh = one_like(a.lc());
    for (;;) {
        const int da = a.degree(), db = b.degree();
        const unsigned long delta = static_cast<unsigned long>(da - db);
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        Poly<T> r = prem(a, b);
        a = b;
        if (r.zero()) return T{};
        b = r.exact_div_scalar(sg * power(sh, delta));
        sg = a.lc();
        if (delta == 1)
            sh = sg;
        else if (delta > 1)
            sh = exact_div(power(sg, delta), power(sh, delta - 1));
        if (b.degree() == 0) {
            const unsigned long n = static_cast<unsigned long>(a.degree());
            T h = (n == 1) ? b.lc() : exact_div(power(b.lc(), n), power(sh, n - 1));
            return sign * h;
        }
    }
}

/// Product of the distinct irreducible factors of f, primitive.
inline ZPoly squarefree_part(const ZPoly& f) {
    if (f.zero()) throw DomainError("squarefree part of zero");
    if (f.degree() <= 0) return ZPoly(Integer(1));
    ZPoly g = gcd(f, f.derivative());
    return primitive_part(exact_div(primitive_part(f), primitive_part(g)));
}

inline ZPoly squarefree_part(const QPoly& f) { return squarefree_part(primitive_integer(f)); }

inline FpPoly squarefree_part_simple(const FpPoly& f) {
    FpPoly d = f.derivative();
    if (d.zero()) return make_monic(f);  // only in characteristic dividing every exponent
    return make_monic(divrem(f, gcd(f, d)).quotient);
}

}  // namespace pscert
