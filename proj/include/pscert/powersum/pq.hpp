#pragma once

// P_n(z) = 1 + z^n + (-1-z)^n and its split into the factor C_n supported on
// the trivial roots {0, -1, w, w^2} and the remaining factor Q_n.

#include <string>

#include "pscert/unipoly/gcd.hpp"

namespace pscert {

struct PQDecomposition {
    int n = 0;
    ZPoly P;
    ZPoly C;
    QPoly Q;  // P / C
};

inline ZPoly poly_x_z() { return ZPoly({Integer(0), Integer(1)}); }
inline ZPoly poly_x_plus_1() { return ZPoly({Integer(1), Integer(1)}); }
inline ZPoly poly_cyclotomic3() { return ZPoly({Integer(1), Integer(1), Integer(1)}); }

/// 1 + z^n + (-1-z)^n with integer coefficients.
inline ZPoly power_sum_p(int n) {
    if (n < 1) throw DomainError("P_n needs n >= 1");
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    const bool odd = n % 2;
    for (int k = 0; k <= n; ++k) {
        Integer b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        c[static_cast<std::size_t>(k)] = odd ? Integer(-b) : b;
    }
    c[0] += 1;
    c[static_cast<std::size_t>(n)] += 1;
    return ZPoly(std::move(c));
}

/// The trivial factor by n mod 6:
///   0: 1    1: z(z+1)(z^2+z+1)^2    2: z^2+z+1
///   3: z(z+1)    4: (z^2+z+1)^2    5: z(z+1)(z^2+z+1)
inline ZPoly trivial_factor(int n) {
    const ZPoly x = poly_x_z(), x1 = poly_x_plus_1(), w = poly_cyclotomic3();
    switch (n % 6) {
        case 0: return ZPoly(Integer(1));
        case 1: return x * x1 * w * w;
        case 2: return w;
        case 3: return x * x1;
        case 4: return w * w;
        default: return x * x1 * w;
    }
}

inline std::string trivial_factor_label(int n) {
    switch (n % 6) {
        case 0: return "1";
        case 1: return "z(z+1)(z^2+z+1)^2";
        case 2: return "z^2+z+1";
        case 3: return "z(z+1)";
        case 4: return "(z^2+z+1)^2";
        default: return "z(z+1)(z^2+z+1)";
    }
}

/// Exact decomposition P_n = C_n * Q_n. A failing division or a Q_n that
/// still vanishes at a trivial root signals a bug and throws.
inline PQDecomposition build_pq(int n) {
    if (n < 2) throw DomainError("build_pq needs n >= 2");
    PQDecomposition d;
    d.n = n;
    d.P = power_sum_p(n);
    d.C = trivial_factor(n);
    d.Q = exact_div(to_rational(d.P), to_rational(d.C));
    if (d.Q.degree() % 6 != 0) throw std::logic_error("deg Q_n is not a multiple of 6 for n = " + std::to_string(n));
    const QPoly trivial = to_rational(poly_x_z() * poly_x_plus_1() * poly_cyclotomic3());
    if (gcd(d.Q, trivial).degree() > 0) throw std::logic_error("Q_n keeps a trivial root for n = " + std::to_string(n));
    return d;
}

/// Primitive integer form of Q_n (positive leading coefficient).
inline ZPoly q_primitive(const PQDecomposition& d) { return primitive_integer(d.Q); }

}  // namespace pscert
