#pragma once

// Certified real intervals and complex boxes over MPFR.
//
// Every endpoint is an MPFR float computed with directed rounding (lower
// endpoint toward -inf, upper toward +inf). MPFR rounds each elementary
// function correctly, so each operation returns an enclosure of the exact
// image, and raising the working precision never widens a result.

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "pscert/exactnum/errors.hpp"
#include "pscert/exactnum/number.hpp"

namespace pscert {

using Precision = mpfr_prec_t;

namespace precision_policy {
inline constexpr Precision start_bits = 64;
inline constexpr Precision default_cap = 16384;

/// Cap on working precision; PSCERT_MAX_PRECISION overrides the default.
inline Precision max_bits() {
    if (const char* env = std::getenv("PSCERT_MAX_PRECISION")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 64) return static_cast<Precision>(v);
    }
    return default_cap;
}
}  // namespace precision_policy

namespace detail {

// Owning MPFR scalar.
class Mpfr {
public:
    explicit Mpfr(Precision prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Mpfr(const Mpfr& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(x_, MPFR_PREC_MIN);
        mpfr_swap(x_, o.x_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    Precision prec() const { return mpfr_get_prec(x_); }

private:
    mpfr_t x_;
};

inline Rational to_rational(mpfr_srcptr x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

inline std::string to_hex(mpfr_srcptr x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%Ra", x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace detail

class RealInterval {
public:
    explicit RealInterval(Precision prec = precision_policy::start_bits) : lo_(prec), hi_(prec) {}

    static RealInterval point(const Rational& q, Precision prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval point(long v, Precision prec) { return point(Rational(v), prec); }

    static RealInterval bounds(const Rational& lo, const Rational& hi, Precision prec) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
        RealInterval r(prec);
        mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    /// Decimal or MPFR hex string ("0x1.8p+1"); rounded outward.
    static RealInterval parse(const std::string& text, Precision prec) {
        RealInterval r(prec);
        if (mpfr_set_str(r.lo_.get(), text.c_str(), 0, MPFR_RNDD) != 0 ||
            mpfr_set_str(r.hi_.get(), text.c_str(), 0, MPFR_RNDU) != 0)
            throw std::invalid_argument("not a number: " + text);
        return r;
    }

    static RealInterval parse_bounds(const std::string& lo, const std::string& hi, Precision prec) {
        RealInterval a = parse(lo, prec), b = parse(hi, prec);
        return a.hull(b);
    }

    static RealInterval pi(Precision prec) {
        RealInterval r(prec);
        mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
        return r;
    }

    Precision prec() const { return std::max(lo_.prec(), hi_.prec()); }
    RealInterval with_precision(Precision prec) const {
        RealInterval r(prec);
        mpfr_set(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    double mid_double() const { return 0.5 * (lo_double() + hi_double()); }
    Rational lo_rational() const { return detail::to_rational(lo_.get()); }
    Rational hi_rational() const { return detail::to_rational(hi_.get()); }
    std::string lo_hex() const { return detail::to_hex(lo_.get()); }
    std::string hi_hex() const { return detail::to_hex(hi_.get()); }

    /// Upper bound on hi - lo.
    double width_double() const {
        detail::Mpfr w(prec());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return mpfr_get_d(w.get(), MPFR_RNDU);
    }
    Rational width() const { return hi_rational() - lo_rational(); }

    /// Midpoint as a degenerate (or one-ulp) interval.
    RealInterval midpoint() const {
        Rational m = (lo_rational() + hi_rational()) / 2;
        return point(m, prec() + 2);
    }

    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
    }
    bool contains(const RealInterval& o) const {
        return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_greaterequal_p(hi_.get(), o.hi_.get());
    }
    bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
    bool overlaps(const RealInterval& o) const {
        return mpfr_lessequal_p(lo_.get(), o.hi_.get()) && mpfr_lessequal_p(o.lo_.get(), hi_.get());
    }

    bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
    bool certainly_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }
    /// +1 / -1 when the sign is certain, 0 otherwise.
    int certain_sign() const { return certainly_positive() ? 1 : certainly_negative() ? -1 : 0; }

    bool certainly_less(const RealInterval& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()); }
    bool certainly_greater(const RealInterval& o) const { return o.certainly_less(*this); }
    bool certainly_less(const Rational& q) const { return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0; }
    bool certainly_greater(const Rational& q) const { return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0; }
    bool certainly_le(const Rational& q) const { return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) <= 0; }
    bool certainly_ge(const Rational& q) const { return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) >= 0; }

    RealInterval hull(const RealInterval& o) const {
        RealInterval r(std::max(prec(), o.prec()));
        mpfr_min(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }

    std::optional<RealInterval> intersect(const RealInterval& o) const {
        if (!overlaps(o)) return std::nullopt;
        RealInterval r(std::max(prec(), o.prec()));
        mpfr_max(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_min(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }

    /// Lower endpoint floor / upper endpoint ceiling, as integers.
    Integer floor_lo() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), lo_.get(), MPFR_RNDD);
        return z;
    }
    Integer ceil_hi() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), hi_.get(), MPFR_RNDU);
        return z;
    }

    // --- arithmetic -------------------------------------------------------

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a) {
        RealInterval r(a.prec());
        mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        Precision p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        detail::Mpfr t(p);
        mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
        mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
        mpfr_set_inf(r.lo_.get(), 1);
        mpfr_set_inf(r.hi_.get(), -1);
        for (auto x : xs)
            for (auto y : ys) {
                mpfr_mul(t.get(), x, y, MPFR_RNDD);
                mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
                mpfr_mul(t.get(), x, y, MPFR_RNDU);
                mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
            }
        return r;
    }
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
        if (b.contains_zero()) throw DomainError("division by an interval containing zero");
        Precision p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        detail::Mpfr t(p);
        mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
        mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
        mpfr_set_inf(r.lo_.get(), 1);
        mpfr_set_inf(r.hi_.get(), -1);
        for (auto x : xs)
            for (auto y : ys) {
                mpfr_div(t.get(), x, y, MPFR_RNDD);
                mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
                mpfr_div(t.get(), x, y, MPFR_RNDU);
                mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
            }
        return r;
    }
    RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }
    RealInterval& operator-=(const RealInterval& o) { return *this = *this - o; }
    RealInterval& operator*=(const RealInterval& o) { return *this = *this * o; }
    RealInterval& operator/=(const RealInterval& o) { return *this = *this / o; }

    friend RealInterval abs(const RealInterval& a) {
        if (a.certainly_nonnegative()) return a;
        if (mpfr_sgn(a.hi_.get()) <= 0) return -a;
        RealInterval r(a.prec());
        mpfr_set_zero(r.lo_.get(), 1);
        detail::Mpfr t(a.prec());
        mpfr_neg(t.get(), a.lo_.get(), MPFR_RNDU);
        mpfr_max(r.hi_.get(), t.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }

    friend RealInterval sqr(const RealInterval& a) { return pow(a, 2); }

    friend RealInterval pow(const RealInterval& a, unsigned long n) {
        RealInterval r(a.prec());
        if (n == 0) return point(1, a.prec());
        if (a.certainly_nonnegative()) {
            mpfr_pow_ui(r.lo_.get(), a.lo_.get(), n, MPFR_RNDD);
            mpfr_pow_ui(r.hi_.get(), a.hi_.get(), n, MPFR_RNDU);
            return r;
        }
        if (mpfr_sgn(a.hi_.get()) <= 0) {
            RealInterval m = pow(-a, n);
            return (n % 2 == 0) ? m : -m;
        }
        // Straddles zero.
        detail::Mpfr neg(a.prec()), pos(a.prec());
        mpfr_neg(neg.get(), a.lo_.get(), MPFR_RNDU);
        mpfr_pow_ui(neg.get(), neg.get(), n, MPFR_RNDU);
        mpfr_pow_ui(pos.get(), a.hi_.get(), n, MPFR_RNDU);
        if (n % 2 == 0) {
            mpfr_set_zero(r.lo_.get(), 1);
            mpfr_max(r.hi_.get(), pos.get(), neg.get(), MPFR_RNDU);
        } else {
            mpfr_neg(r.lo_.get(), neg.get(), MPFR_RNDD);
            mpfr_set(r.hi_.get(), pos.get(), MPFR_RNDU);
        }
        return r;
    }

    friend RealInterval sqrt(const RealInterval& a) {
        if (mpfr_sgn(a.lo_.get()) < 0) throw DomainError("sqrt of an interval reaching negatives");
        RealInterval r(a.prec());
        mpfr_sqrt(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval exp(const RealInterval& a) {
        RealInterval r(a.prec());
        mpfr_exp(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_exp(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval log(const RealInterval& a) {
        if (!a.certainly_positive()) throw DomainError("log of an interval reaching zero or negatives");
        RealInterval r(a.prec());
        mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval atan(const RealInterval& a) {
        RealInterval r(a.prec());
        mpfr_atan(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_atan(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval cos(const RealInterval& a) { return trig(a, false); }
    friend RealInterval sin(const RealInterval& a) { return trig(a, true); }

    friend std::ostream& operator<<(std::ostream& os, const RealInterval& a) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "[%.17Rg, %.17Rg]", a.lo_.get(), a.hi_.get());
        os << buf;
        mpfr_free_str(buf);
        return os;
    }

private:
    // Extremes of cos sit at k*pi (cos = (-1)^k); of sin at (k + 1/2)*pi
    // (sin = (-1)^k). Everything else is monotone between them.
    static RealInterval trig(const RealInterval& a, bool is_sin) {
        const Precision p = a.prec();
        RealInterval r(p);
        RealInterval pi_iv = pi(p + 8);
        RealInterval span = a - a;  // hi - lo rounded up, lo-side irrelevant
        RealInterval two_pi = pi_iv + pi_iv;
        if (!mpfr_less_p(span.hi_.get(), two_pi.lo_.get())) {
            mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);
            mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
            return r;
        }
        auto fn = [is_sin](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
            if (is_sin)
                mpfr_sin(out, x, rnd);
            else
                mpfr_cos(out, x, rnd);
        };
        detail::Mpfr t(p);
        fn(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        fn(t.get(), a.hi_.get(), MPFR_RNDD);
        mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
        fn(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
        fn(t.get(), a.hi_.get(), MPFR_RNDU);
        mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);

        // Candidate extremum indices k, conservatively enlarged.
        RealInterval shift = is_sin ? point(make_rational(1, 2), p) : point(0, p);
        RealInterval q_lo = point_of(a.lo_.get(), p) / pi_iv - shift;
        RealInterval q_hi = point_of(a.hi_.get(), p) / pi_iv - shift;
        Integer k0, k1;
        mpfr_get_z(k0.get_mpz_t(), q_lo.lo_.get(), MPFR_RNDU);
        mpfr_get_z(k1.get_mpz_t(), q_hi.hi_.get(), MPFR_RNDD);
        for (Integer k = k0; k <= k1; ++k) {
            if (mpz_even_p(k.get_mpz_t()))
                mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
            else
                mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);
        }
        return r;
    }
    static RealInterval point_of(mpfr_srcptr x, Precision p) {
        RealInterval r(std::max<Precision>(p, mpfr_get_prec(x)));
        mpfr_set(r.lo_.get(), x, MPFR_RNDD);
        mpfr_set(r.hi_.get(), x, MPFR_RNDU);
        return r;
    }

    detail::Mpfr lo_;
    detail::Mpfr hi_;
};

inline RealInterval operator+(const RealInterval& a, long v) { return a + RealInterval::point(v, a.prec()); }
inline RealInterval operator-(const RealInterval& a, long v) { return a - RealInterval::point(v, a.prec()); }
inline RealInterval operator*(const RealInterval& a, long v) { return a * RealInterval::point(v, a.prec()); }
inline RealInterval operator/(const RealInterval& a, long v) { return a / RealInterval::point(v, a.prec()); }
inline RealInterval operator*(long v, const RealInterval& a) { return a * v; }
inline RealInterval operator+(const RealInterval& a, const Rational& q) { return a + RealInterval::point(q, a.prec()); }
inline RealInterval operator-(const RealInterval& a, const Rational& q) { return a - RealInterval::point(q, a.prec()); }
inline RealInterval operator*(const RealInterval& a, const Rational& q) { return a * RealInterval::point(q, a.prec()); }

/// Rectangular complex enclosure re + i*im.
class ComplexBox {
public:
    explicit ComplexBox(Precision prec = precision_policy::start_bits) : re_(prec), im_(prec) {}
    ComplexBox(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexBox point(const Rational& re, const Rational& im, Precision prec) {
        return {RealInterval::point(re, prec), RealInterval::point(im, prec)};
    }

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }
    Precision prec() const { return std::max(re_.prec(), im_.prec()); }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool overlaps(const ComplexBox& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }

    ComplexBox conj() const { return {re_, -im_}; }

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend ComplexBox operator-(const ComplexBox& a) { return {-a.re_, -a.im_}; }
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ComplexBox operator*(const ComplexBox& a, const RealInterval& s) { return {a.re_ * s, a.im_ * s}; }
    friend ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
        RealInterval den = sqr(b.re_) + sqr(b.im_);
        ComplexBox num = a * b.conj();
        return {num.re_ / den, num.im_ / den};
    }
    friend ComplexBox operator+(const ComplexBox& a, long v) { return {a.re_ + v, a.im_}; }
    friend ComplexBox operator+(long v, const ComplexBox& a) { return a + v; }

    ComplexBox reciprocal() const { return ComplexBox::point(1, 0, prec()) / *this; }

    friend ComplexBox pow(const ComplexBox& a, unsigned long n) {
        ComplexBox result = ComplexBox::point(1, 0, a.prec());
        ComplexBox base = a;
        while (n) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    friend RealInterval abs(const ComplexBox& a) { return sqrt(sqr(a.re_) + sqr(a.im_)); }
    friend RealInterval abs_squared(const ComplexBox& a) { return sqr(a.re_) + sqr(a.im_); }

    friend std::ostream& operator<<(std::ostream& os, const ComplexBox& a) {
        return os << a.re_ << " + i" << a.im_;
    }

private:
    RealInterval re_;
    RealInterval im_;
};

}  // namespace pscert
