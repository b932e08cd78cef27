#pragma once

// Analytic inequalities of the emptiness argument, each evaluated in interval
// arithmetic and reported with a verdict read off the enclosure endpoints.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pscert/analytic/segment.hpp"
#include "pscert/exactnum/expr.hpp"
#include "pscert/exactnum/unity.hpp"

namespace pscert {

enum class BoundVerdict { Satisfied, Violated, Undecided };

inline std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Satisfied: return "Satisfied";
        case BoundVerdict::Violated: return "Violated";
        default: return "Undecided";
    }
}

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    RealInterval value;
    BoundVerdict verdict = BoundVerdict::Undecided;
    std::optional<Integer> integer_value;
    std::vector<std::pair<std::string, RealInterval>> enclosures;  // named intermediate values
    std::string note;
};

struct HeightBound {
    int d = 0;
    RealInterval dh;
};

namespace detail {

inline std::string interval_text(const RealInterval& x) {
    return "[" + x.lo_hex() + ", " + x.hi_hex() + "]";
}

inline RealInterval interval_max(const RealInterval& a, const RealInterval& b) {
    return RealInterval::bounds(std::max(a.lo_rational(), b.lo_rational()), std::max(a.hi_rational(), b.hi_rational()),
                                std::max(a.prec(), b.prec()));
}

// Verdict for value < threshold.
inline BoundVerdict below(const RealInterval& value, const RealInterval& threshold) {
    if (value.certainly_less(threshold)) return BoundVerdict::Satisfied;
    if (mpfr_greaterequal_p(value.lo(), threshold.hi())) return BoundVerdict::Violated;
    return BoundVerdict::Undecided;
}

// c / (log c)^2, increasing for c > e^2.
inline RealInterval c_over_log_sq(const Integer& c, Precision prec) {
    RealInterval x = RealInterval::point(Rational(c), prec);
    return x / sqr(log(x));
}

// Largest c >= 149 (> e^5) that is not certainly excluded by
// c/(log c)^2 <= rhs, i.e. every larger c has c/(log c)^2 > rhs.hi.
inline Integer log_square_c_max(const RealInterval& rhs, Precision prec) {
    auto excluded = [&](const Integer& c) { return c_over_log_sq(c, prec).certainly_greater(rhs); };
    Integer lo = 149;
    if (excluded(lo)) return lo - 1;
    Integer hi = 2 * lo;
    while (!excluded(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (excluded(mid))
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace detail

/// Contribution (t^2 - 3/4)^3 / (1/4 + t^2)^2 of one group of six zeros to
/// 2|f(omega)|, given t^2. Satisfied when certainly below 1/2.
inline BoundReport bound_14_9_t2(const RealInterval& t2) {
    if (!t2.certainly_greater(make_rational(3, 4))) throw DomainError("bound_14_9 needs t > sqrt(3)/2");
    BoundReport r;
    r.name = "group_of_six_contribution";
    r.inputs = {{"t^2", detail::interval_text(t2)}};
    r.value = pow(t2 - make_rational(3, 4), 3) / sqr(t2 + make_rational(1, 4));
    r.verdict = detail::below(r.value, RealInterval::point(make_rational(1, 2), t2.prec()));
    return r;
}

inline BoundReport bound_14_9(const RealInterval& t) { return bound_14_9_t2(sqr(t)); }

/// The same at |alpha| = r, i.e. t^2 = r^2 - 1/4 exactly.
inline BoundReport bound_14_9_at_modulus(const Rational& r, Precision prec = 128) {
    return bound_14_9_t2(RealInterval::point(r * r - make_rational(1, 4), prec));
}

/// pi r^b / 2: every c up to its floor has no common zero with b.
inline BoundReport c_small_threshold(const RealInterval& r, int b) {
    if (!r.certainly_ge(make_rational(14, 9))) throw DomainError("c_small_threshold needs r >= 14/9");
    if (b < 6) throw DomainError("c_small_threshold needs b >= 6");
    BoundReport rep;
    rep.name = "c_small_threshold";
    rep.inputs = {{"r", detail::interval_text(r)}, {"b", std::to_string(b)}};
    rep.value = RealInterval::pi(r.prec()) * pow(r, static_cast<unsigned long>(b)) / 2;
    rep.integer_value = rep.value.floor_lo();
    rep.verdict = BoundVerdict::Satisfied;
    return rep;
}

/// The same for an exact lower bound on r (checked exactly against 14/9).
inline BoundReport c_small_threshold(const Rational& r, int b, Precision prec = 128) {
    if (r < make_rational(14, 9)) throw DomainError("c_small_threshold needs r >= 14/9");
    RealInterval ri = RealInterval::point(r, prec);
    if (ri.certainly_ge(make_rational(14, 9))) return c_small_threshold(ri, b);
    if (b < 6) throw DomainError("c_small_threshold needs b >= 6");
    BoundReport rep;
    rep.name = "c_small_threshold";
    rep.inputs = {{"r", r.get_str()}, {"b", std::to_string(b)}};
    rep.value = RealInterval::pi(prec) * pow(ri, static_cast<unsigned long>(b)) / 2;
    rep.integer_value = rep.value.floor_lo();
    rep.verdict = BoundVerdict::Satisfied;
    return rep;
}

/// exp(-(9/8)(22 pi + d h)(max{34, d log(k/2) + 10})^2).
inline RealInterval lmn_lower(int d, const RealInterval& h, const Integer& k) {
    if (d < 1 || k < 1) throw DomainError("lmn_lower needs d >= 1 and k >= 1");
    if (!h.certainly_nonnegative()) throw DomainError("lmn_lower needs h >= 0");
    const Precision prec = h.prec();
    RealInterval dh = h * d;
    RealInterval inner = log(RealInterval::point(make_rational(k, Integer(2)), prec)) * d + 10;
    RealInterval m = detail::interval_max(RealInterval::point(34, prec), inner);
    RealInterval e = (RealInterval::pi(prec) * 22 + dh) * sqr(m) * make_rational(9, 8);
    return exp(-e);
}

/// d h(alpha) <= log 2 + (b/3) log r for the a = 1 case.
inline HeightBound height_bound_a1(int b, const RealInterval& r) {
    HeightBound hb;
    hb.d = b;
    hb.dh = log(RealInterval::point(2, r.prec())) + log(r) * make_rational(b, 3);
    return hb;
}

/// Largest c with c/(log c)^2 <= 320 b^2 + 2b^3/3. Given c_lo, the verdict
/// is Violated when c_lo exceeds it (no admissible c remains).
inline BoundReport lmn3_c_max(int b, std::optional<Integer> c_lo = std::nullopt, Precision prec = 128) {
    if (b < 6) throw DomainError("lmn3_c_max needs b >= 6");
    const Rational rhs = Rational(320 * b * b) + make_rational(2L * b * b * b, 3);
    BoundReport rep;
    rep.name = "lmn3_c_max";
    rep.inputs = {{"b", std::to_string(b)}, {"rhs", rhs.get_str()}};
    Integer c = detail::log_square_c_max(RealInterval::point(rhs, prec), prec);
    rep.integer_value = c;
    rep.value = RealInterval::point(Rational(c), prec);
    rep.verdict = BoundVerdict::Satisfied;
    if (c_lo) {
        rep.inputs.emplace_back("c_lo", c_lo->get_str());
        if (*c_lo > c) {
            rep.verdict = BoundVerdict::Violated;
            rep.note = "c_lo exceeds c_max by a factor " + std::to_string(make_rational(*c_lo, c).get_d());
        } else {
            rep.note = "window (" + c_lo->get_str() + ", " + c.get_str() + "] remains";
        }
    }
    return rep;
}

/// |zeta^c - 1| <= 2r^{-c}/(1 - r^{-c}) <= 3 r^{-c}, valid once r^c > 3.
/// The value is the ratio 2/(1 - r^{-c}), Satisfied when it is at most 3.
inline BoundReport zeta_power_bound(const RealInterval& r, const Integer& c) {
    const Precision prec = r.prec();
    BoundReport rep;
    rep.name = "zeta_power_bound";
    rep.inputs = {{"r", detail::interval_text(r)}, {"c", c.get_str()}};
    RealInterval rc = exp(log(r) * RealInterval::point(Rational(c), prec));
    rep.enclosures.emplace_back("r^c", rc);
    if (!rc.certainly_greater(RealInterval::point(3, prec))) {
        rep.value = rc;
        rep.verdict = rc.certainly_less(RealInterval::point(3, prec)) ? BoundVerdict::Violated : BoundVerdict::Undecided;
        rep.note = "needs r^c > 3";
        return rep;
    }
    rep.value = RealInterval::point(2, prec) / (RealInterval::point(1, prec) - RealInterval::point(1, prec) / rc);
    rep.verdict = mpfr_cmp_ui(rep.value.hi(), 3) <= 0 ? BoundVerdict::Satisfied : BoundVerdict::Undecided;
    return rep;
}

enum class ParityProfile { ExactlyOneEven, Other };

/// b-range bound, r lower bound and, when b is given, the c-bound from
/// c/(log c)^2 <= 3(ab)^6 (1 + 1/log r), the root-of-unity exclusion
/// 2b^8 <= r^b and the zeta-power bound at c = b + 1. Without an explicit r
/// the lower bound on r is used.
inline std::vector<BoundReport> general_bounds(int a, ParityProfile profile, std::optional<int> b = std::nullopt,
                                               std::optional<RealInterval> r = std::nullopt, Precision prec = 128) {
    if (a < 2) throw DomainError("general_bounds needs a >= 2");
    if (b && *b <= a) throw DomainError("general_bounds needs b > a");
    const bool one_even = profile == ParityProfile::ExactlyOneEven;
    std::vector<BoundReport> out;

    BoundReport bb;
    bb.name = "b_bound";
    bb.inputs = {{"a", std::to_string(a)}, {"profile", one_even ? "exactly-one-even" : "other"}};
    Integer bval = Integer(600) * a * a;
    if (!one_even) bval <<= a;
    bb.integer_value = bval;
    bb.value = RealInterval::point(Rational(bval), prec);
    bb.verdict = b ? (Integer(*b) < bval ? BoundVerdict::Satisfied : BoundVerdict::Violated) : BoundVerdict::Satisfied;
    out.push_back(bb);

    BoundReport rr;
    rr.name = "r_lower";
    rr.inputs = bb.inputs;
    Integer den = Integer(10) * a;
    if (!one_even) den <<= a;
    rr.value = exp(RealInterval::point(make_rational(Integer(1), den), prec));
    rr.verdict = BoundVerdict::Satisfied;
    out.push_back(rr);

    if (!b) return out;
    RealInterval rv = r ? r->with_precision(prec) : rr.value;
    const long ab = static_cast<long>(a) * *b;

    BoundReport cb;
    cb.name = "c_bound";
    cb.inputs = {{"a", std::to_string(a)}, {"b", std::to_string(*b)}, {"r", detail::interval_text(rv)}};
    RealInterval ab6 = pow(RealInterval::point(ab, prec), 6);
    RealInterval rhs = ab6 * 3 * (RealInterval::point(1, prec) + RealInterval::point(1, prec) / log(rv));
    cb.enclosures.emplace_back("rhs", rhs);
    Integer cmax = detail::log_square_c_max(rhs, prec);
    cb.integer_value = cmax;
    cb.value = RealInterval::point(Rational(cmax), prec);
    cb.verdict = BoundVerdict::Satisfied;
    out.push_back(cb);

    BoundReport ru;
    ru.name = "root_of_unity_exclusion";
    ru.inputs = cb.inputs;
    ru.value = pow(rv, static_cast<unsigned long>(*b));
    RealInterval thr = pow(RealInterval::point(*b, prec), 8) * 2;
    ru.enclosures.emplace_back("2b^8", thr);
    if (mpfr_lessequal_p(thr.hi(), ru.value.lo()))
        ru.verdict = BoundVerdict::Satisfied;
    else if (ru.value.certainly_less(thr))
        ru.verdict = BoundVerdict::Violated;
    out.push_back(ru);

    out.push_back(zeta_power_bound(rv, Integer(*b + 1)));
    return out;
}

/// |w^2 + w + 1| <= 10 delta, given e^{-delta} <= |w|, |1 + w| <= e^{delta}
/// and delta <= 1/10, all verified on the enclosures.
inline BoundReport ten_delta_check(const ComplexBox& w, const RealInterval& delta) {
    const Precision prec = std::max(w.prec(), delta.prec());
    if (!(mpfr_lessequal_p(delta.hi(), RealInterval::point(make_rational(1, 10), prec).lo()) && delta.certainly_nonnegative()))
        throw PreconditionUnverifiable("delta must lie in [0, 1/10]");
    const RealInterval lo = exp(-delta), hi = exp(delta);
    auto within = [&](const RealInterval& m) {
        return mpfr_lessequal_p(lo.hi(), m.lo()) && mpfr_lessequal_p(m.hi(), hi.lo());
    };
    const RealInterval mw = abs(w), mw1 = abs(w + 1);
    if (!within(mw) || !within(mw1))
        throw PreconditionUnverifiable("|w| or |1+w| not certainly within [e^-delta, e^delta]");
    BoundReport rep;
    rep.name = "ten_delta";
    rep.inputs = {{"w", detail::interval_text(w.re()) + " + i" + detail::interval_text(w.im())},
                  {"delta", detail::interval_text(delta)}};
    rep.value = abs(w * w + w + 1);
    RealInterval thr = delta * 10;
    rep.enclosures.emplace_back("10 delta", thr);
    if (mpfr_lessequal_p(rep.value.hi(), thr.lo()))
        rep.verdict = BoundVerdict::Satisfied;
    else if (rep.value.certainly_greater(thr))
        rep.verdict = BoundVerdict::Violated;
    return rep;
}

/// Roots of unity have |w| = 1 exactly; for w = omega, omega^2 also |1 + w| = 1
/// and w^2 + w + 1 = 0, so the check is exact there.
inline BoundReport ten_delta_check(const UnityRoot& w, const RealInterval& delta) {
    const Precision prec = std::max<Precision>(delta.prec(), 128);
    if (!sum_is_zero({w.pow(2), w, UnityRoot()})) return ten_delta_check(w.enclosure(prec), delta);
    if (!delta.certainly_nonnegative() || !delta.certainly_le(make_rational(1, 10)))
        throw PreconditionUnverifiable("delta must lie in [0, 1/10]");
    BoundReport rep;
    rep.name = "ten_delta";
    std::ostringstream ws;
    ws << w;
    rep.inputs = {{"w", ws.str()}, {"delta", detail::interval_text(delta)}};
    rep.value = RealInterval::point(0, prec);
    rep.enclosures.emplace_back("10 delta", delta * 10);
    rep.verdict = BoundVerdict::Satisfied;
    rep.note = "exact: w^2 + w + 1 = 0";
    return rep;
}

struct WindowAngle {
    RealInterval theta;            // arg(1 + zeta^{-b}) in (-pi, pi]
    RealInterval pi_over_abs_theta;
    RealInterval modulus;          // |zeta|
};

/// theta = arg(1 + zeta^{-b}) for zeta = -1/2 + it.
inline WindowAngle window_angle(int b, const RealInterval& t, Precision prec) {
    ComplexBox z = detail::orbit_base(t.with_precision(prec));
    ComplexBox w = pow(z.reciprocal(), static_cast<unsigned long>(b)) + 1;
    if (!w.re().certainly_positive()) throw PreconditionUnverifiable("1 + zeta^-b not certainly in the right half plane");
    WindowAngle a;
    a.theta = atan(w.im() / w.re());
    if (a.theta.contains_zero()) throw PreconditionUnverifiable("theta not separated from 0");
    a.pi_over_abs_theta = RealInterval::pi(prec) / abs(a.theta);
    a.modulus = abs(z);
    return a;
}

/// Rules out every c in (c_lo, c_hi]: a common zero forces
/// |c theta + m pi| <= (b+1) |zeta|^{-c}, so m pi/|theta| must be within
/// (b+1)|zeta|^{-c_lo}/|theta| of the integer c. Satisfied when every
/// candidate m is certainly farther than that from all integers.
inline BoundReport close_window(int b, const SegmentRoot& zeta, const Integer& c_lo, const Integer& c_hi,
                                Precision prec = 256) {
    BoundReport rep;
    rep.name = "close_window";
    rep.inputs = {{"b", std::to_string(b)}, {"c_lo", c_lo.get_str()}, {"c_hi", c_hi.get_str()},
                  {"t", detail::interval_text(zeta.t)}};
    if (c_lo >= c_hi) {
        rep.value = RealInterval::point(0, prec);
        rep.integer_value = Integer(0);
        rep.verdict = BoundVerdict::Satisfied;
        rep.note = "empty window";
        return rep;
    }
    WindowAngle ang;
    try {
        ang = window_angle(b, zeta.t, prec);
    } catch (const PreconditionUnverifiable& e) {
        rep.note = e.what();
        return rep;
    }
    const RealInterval& q = ang.pi_over_abs_theta;
    rep.enclosures = {{"theta", ang.theta}, {"pi/|theta|", q}, {"|zeta|", ang.modulus}};

    // tolerance (b+1) |zeta|^{-c_lo} / |theta|, needing |zeta|^{c_lo} >= b+1
    RealInterval decay = exp(-(log(ang.modulus) * RealInterval::point(Rational(c_lo), prec)));
    if (!(decay * (b + 1)).certainly_less(RealInterval::point(1, prec))) {
        rep.note = "|zeta|^c_lo not certainly above b+1";
        return rep;
    }
    RealInterval tol = decay * (b + 1) * q / RealInterval::pi(prec);
    rep.enclosures.emplace_back("tolerance", tol);

    Integer m_lo = RealInterval::point(Rational(c_lo), prec).floor_lo() / q.ceil_hi();
    if (m_lo < 1) m_lo = 1;
    Integer m_hi = (RealInterval::point(Rational(c_hi), prec) / q).ceil_hi();
    Integer count = 0;
    std::optional<RealInterval> closest;
    for (Integer m = m_lo; m <= m_hi; ++m) {
        RealInterval x = q * RealInterval::point(Rational(m), prec);
        if (mpfr_cmp_z(x.hi(), c_lo.get_mpz_t()) <= 0) continue;
        if (x.certainly_greater(Rational(c_hi + 1))) continue;
        ++count;
        auto nd = nearest_integer_distance(x);
        RealInterval dist = nd.ambiguous ? RealInterval::bounds(make_rational(1, 2) - x.width(), make_rational(1, 2), prec)
                                         : nd.distance;
        if (!closest || dist.certainly_less(*closest)) closest = dist;
        if (!dist.certainly_greater(tol)) {
            rep.verdict = BoundVerdict::Undecided;
            rep.integer_value = count;
            rep.value = dist;
            rep.note = "m = " + m.get_str() + " not separated from the integer " + nd.nearest.get_str();
            return rep;
        }
    }
    rep.integer_value = count;
    rep.value = closest ? *closest : RealInterval::point(0, prec);
    rep.verdict = BoundVerdict::Satisfied;
    rep.note = "m in [" + m_lo.get_str() + ", " + m_hi.get_str() + "], " + count.get_str() + " candidates";
    return rep;
}

}  // namespace pscert
