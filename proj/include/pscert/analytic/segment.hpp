#pragma once

// Certified zeros of Q_n on the segment z = -1/2 + it, t > sqrt(3)/2, their
// six-element orbits, and the maximal modulus of a root of Q_n.
//
// On the line Re z = -1/2 we have -1 - z = conj(z), so P_n and C_n (hence
// Q_n) are real there. Writing z = -e^{i theta}/(2 cos theta) with theta in
// (pi/2, 2pi/3), the sign of P_n equals the sign of
//   s(theta) = 2 cos(n theta) + (2 |cos theta|)^n,
// which is (-1)^k at theta = k pi/n.

#include <array>
#include <vector>

#include "pscert/exactnum/errors.hpp"
#include "pscert/exactnum/interval.hpp"
#include "pscert/powersum/pq.hpp"
#include "pscert/unipoly/gcd.hpp"

namespace pscert {

struct SegmentRoot {
    int n = 0;
    RealInterval t;      // imaginary part
    RealInterval theta;  // pi - atan(2t)
    // alpha, conj(alpha), conj(alpha)/alpha, alpha/conj(alpha), 1/alpha, 1/conj(alpha)
    std::array<ComplexBox, 6> orbit;
    Precision precision = 0;
};

/// s(theta) = 2 cos(n theta) + (2|cos theta|)^n.
inline RealInterval segment_sign_function(int n, const RealInterval& theta) {
    RealInterval c = cos(theta);
    return 2 * cos(theta * n) + pow(2 * abs(c), static_cast<unsigned long>(n));
}

/// Enclosure of f(z) at z = -1/2 + it, f with integer coefficients.
inline ComplexBox eval_on_segment(const ZPoly& f, const RealInterval& t) {
    const Precision prec = t.prec();
    ComplexBox z(RealInterval::point(make_rational(-1, 2), prec), t);
    ComplexBox acc(RealInterval::point(0, prec), RealInterval::point(0, prec));
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * z + ComplexBox(RealInterval::point(Rational(f.coeffs()[static_cast<std::size_t>(i)]), prec),
                                   RealInterval::point(0, prec));
    return acc;
}

namespace detail {

// Certified sign of Re f(-1/2 + it) at a rational t, raising precision as needed.
inline int segment_sign_at(const ZPoly& f, const Rational& t, Precision start, Precision cap) {
    for (Precision p = start; p <= cap; p *= 2) {
        int s = eval_on_segment(f, RealInterval::point(t, p)).re().certain_sign();
        if (s != 0) return s;
    }
    return 0;
}

inline ComplexBox orbit_base(const RealInterval& t) {
    return ComplexBox(RealInterval::point(make_rational(-1, 2), t.prec()), t);
}

inline std::array<ComplexBox, 6> make_orbit(const RealInterval& t) {
    ComplexBox a = orbit_base(t), ab = a.conj();
    return {a, ab, ab / a, a / ab, a.reciprocal(), ab.reciprocal()};
}

// 1 + max |a_i / a_d|, rounded up to an integer.
inline Integer cauchy_bound(const ZPoly& f) {
    Rational m = 0;
    const Integer lc = abs(f.lc());
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, make_rational(abs(f.coeffs()[static_cast<std::size_t>(i)]), lc));
    return ceil_of(m) + 1;
}

}  // namespace detail

/// All zeros of Q_n on the upper segment, in increasing t, each enclosed in
/// a t-interval narrower than `width`. The number of sign changes found must
/// equal deg(Q_n)/6.
inline std::vector<SegmentRoot> isolate_segment_roots(int n, const Rational& width,
                                                      Precision start = 128,
                                                      Precision cap = precision_policy::max_bits()) {
    if (n < 2) throw DomainError("isolate_segment_roots needs n >= 2");
    if (width <= 0) throw DomainError("width must be positive");
    const PQDecomposition d = build_pq(n);
    const int D = d.Q.degree();
    if (D == 0) return {};
    const ZPoly q = q_primitive(d);

    // test points in increasing t: just below sqrt(3)/2, the grid, a Cauchy bound
    std::vector<Rational> pts;
    pts.push_back(sqrt(RealInterval::point(3, start)).lo_rational() / 2);
    const int k_min = n / 2 + 1, k_max = (2 * n + 2) / 3 - 1;  // n/2 < k < 2n/3
    for (int k = k_max; k >= k_min; --k) {
        RealInterval th = RealInterval::pi(start) * make_rational(k, n);
        RealInterval tk = -(sin(th) / cos(th)) / 2;
        pts.push_back(tk.midpoint().lo_rational());
    }
    pts.push_back(Rational(detail::cauchy_bound(q)) + 1);

    std::vector<int> signs;
    for (const auto& t : pts) {
        int s = detail::segment_sign_at(q, t, start, cap);
        if (s == 0) throw WidthUnreachable("sign of Q_" + std::to_string(n) + " undetermined at a grid point");
        signs.push_back(s);
    }

    std::vector<SegmentRoot> roots;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (signs[i] == signs[i + 1]) continue;
        Rational lo = pts[i], hi = pts[i + 1];
        int s_lo = signs[i];
        while (hi - lo >= width) {
            Rational mid = (lo + hi) / 2;
            int s = detail::segment_sign_at(q, mid, start, cap);
            if (s == 0) {
                mid = (lo + 2 * hi) / 3;
                s = detail::segment_sign_at(q, mid, start, cap);
            }
            if (s == 0) throw WidthUnreachable("cannot separate a root of Q_" + std::to_string(n) + " at the precision cap");
            if (s == s_lo)
                lo = mid;
            else
                hi = mid;
        }
        SegmentRoot r;
        r.n = n;
        r.precision = std::max<Precision>(start, 2 * static_cast<Precision>(mpz_sizeinbase(width.get_den_mpz_t(), 2)));
        r.t = RealInterval::bounds(lo, hi, r.precision);
        r.theta = RealInterval::pi(r.precision) - atan(2 * r.t);
        r.orbit = detail::make_orbit(r.t);
        roots.push_back(std::move(r));
    }
    if (static_cast<int>(roots.size()) * 6 != D)
        throw std::logic_error("segment root count " + std::to_string(roots.size()) + " differs from deg Q_" +
                               std::to_string(n) + "/6 = " + std::to_string(D / 6));
    return roots;
}

/// Enclosure of max |root of Q_n| = sqrt(1/4 + t_max^2), after checking that
/// every other orbit member is certainly smaller in modulus.
inline RealInterval max_modulus(int n, const Rational& width, Precision start = 128,
                                Precision cap = precision_policy::max_bits()) {
    auto roots = isolate_segment_roots(n, width, start, cap);
    if (roots.empty()) throw DomainError("Q_" + std::to_string(n) + " is constant");
    const SegmentRoot& top = roots.back();
    RealInterval r = abs(top.orbit[0]);
    for (const auto& sr : roots)
        for (std::size_t j = 0; j < 6; ++j) {
            if (&sr == &top && j < 2) continue;
            RealInterval m = abs(sr.orbit[j]);
            if (!m.certainly_less(r)) throw PrecisionExhausted("maximal modulus not separated; refine width");
        }
    return r;
}

}  // namespace pscert
