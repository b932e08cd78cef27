#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficients are stored constant term first and the vector is kept
// trimmed, so the leading coefficient of a nonzero polynomial is nonzero and
// degree() == size() - 1. The zero polynomial has degree -1.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pscert/exactnum/modular.hpp"
#include "pscert/exactnum/number.hpp"

namespace pscert {

template <class T>
class Poly;

// --- ring helpers -----------------------------------------------------------
//
// Generic code never writes T(1): prime-field elements need their modulus,
// so the multiplicative identity is derived from an existing element.

inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

inline Integer from_int_like(long long v, const Integer&) { return Integer(static_cast<long>(v)); }
inline Rational from_int_like(long long v, const Rational&) { return Rational(static_cast<long>(v)); }
inline Fp from_int_like(long long v, const Fp& like) { return Fp::from_signed(v, like.modulus()); }

template <class T>
class Poly {
public:
    using value_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(T constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }

    static Poly monomial(T coeff, std::size_t deg) {
        if (is_zero(coeff)) return {};
        std::vector<T> c(deg + 1);
        c[deg] = std::move(coeff);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const T& lc() const { return c_.back(); }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
    const std::vector<T>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    friend bool is_zero(const Poly& p) { return p.c_.empty(); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
        const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
        std::vector<T> c = big.c_;
        for (std::size_t i = 0; i < small.c_.size(); ++i) c[i] = c[i] + small.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<T> c = a.c_;
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        if (is_zero(s)) return {};
        std::vector<T> c = a.c_;
        for (auto& x : c) x = x * s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Multiply by x^k.
    Poly shift(std::size_t k) const {
        if (zero()) return {};
        std::vector<T> c(k);
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    Poly pow(unsigned long n) const {
        if (zero()) return {};
        Poly result(one_like(lc()));
        Poly base = *this;
        while (n) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    T operator()(const T& x) const {
        if (zero()) return T{};
        T acc = c_.back();
        for (auto it = std::next(c_.rbegin()); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * from_int_like(static_cast<long long>(i), c_[i]);
        return Poly(std::move(c));
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(f(x));
        return Poly<U>(std::move(c));
    }

    /// Divide every coefficient exactly by s.
    Poly exact_div_scalar(const T& s) const {
        std::vector<T> c = c_;
        for (auto& x : c) x = exact_div(x, s);
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Poly<T> one_like(const Poly<T>& p) {
    return Poly<T>(one_like(p.zero() ? T{} : p.lc()));
}
template <class T>
Poly<T> from_int_like(long long v, const Poly<T>& like) {
    return Poly<T>(from_int_like(v, like.zero() ? T{} : like.lc()));
}

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;
using FpPoly = Poly<Fp>;

// --- division -------------------------------------------------------------

template <class T>
struct DivRem {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Euclidean division over a field.
template <class T>
DivRem<T> divrem(const Poly<T>& f, const Poly<T>& g) {
    if (g.zero()) throw DomainError("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly<T>(), f};
    std::vector<T> r = f.coeffs();
    const int dg = g.degree();
    std::vector<T> q(static_cast<std::size_t>(f.degree() - dg + 1));
    const T inv = one_like(g.lc()) / g.lc();
    for (int i = f.degree(); i >= dg; --i) {
        if (is_zero(r[static_cast<std::size_t>(i)])) continue;
        T factor = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - dg)] = factor;
        for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= factor * g.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dg));
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> rem(const Poly<T>& f, const Poly<T>& g) {
    return divrem(f, g).remainder;
}

/// Exact quotient f / g over an integral domain; throws DivisionFailure when
/// g does not divide f.
template <class T>
Poly<T> exact_div(const Poly<T>& f, const Poly<T>& g) {
    if (g.zero()) throw DomainError("polynomial division by zero");
    if (f.zero()) return {};
    if (f.degree() < g.degree()) throw DivisionFailure("exact polynomial division: degree too small");
    std::vector<T> r = f.coeffs();
    const int dg = g.degree();
    std::vector<T> q(static_cast<std::size_t>(f.degree() - dg + 1));
    for (int i = f.degree(); i >= dg; --i) {
        const T& top = r[static_cast<std::size_t>(i)];
        if (is_zero(top)) continue;
        T factor = exact_div(top, g.lc());
        if (!(factor * g.lc() == top)) throw DivisionFailure("exact polynomial division: leading coefficient");
        q[static_cast<std::size_t>(i - dg)] = factor;
        for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= factor * g.coeffs()[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < dg; ++i)
        if (!is_zero(r[static_cast<std::size_t>(i)])) throw DivisionFailure("exact polynomial division: nonzero remainder");
    return Poly<T>(std::move(q));
}

template <class T>
bool divides(const Poly<T>& g, const Poly<T>& f) {
    try {
        (void)exact_div(f, g);
        return true;
    } catch (const DivisionFailure&) {
        return false;
    }
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed without
/// division in the coefficient ring.
template <class T>
Poly<T> prem(const Poly<T>& f, const Poly<T>& g) {
    if (g.zero()) throw DomainError("pseudo-remainder by zero");
    if (f.degree() < g.degree()) return f;
    const int dg = g.degree();
    int e = f.degree() - dg + 1;
    std::vector<T> r = f.coeffs();
    const T& l = g.lc();
    for (int i = f.degree(); i >= dg; --i) {
        T top = r[static_cast<std::size_t>(i)];
        for (auto& x : r) x = x * l;
        if (!is_zero(top))
            for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= top * g.coeffs()[static_cast<std::size_t>(j)];
        --e;
        r.resize(static_cast<std::size_t>(i));
    }
    // Each step multiplied by l once; e is now 0.
    (void)e;
    return Poly<T>(std::move(r));
}

// --- conversions ----------------------------------------------------------

inline QPoly to_rational(const ZPoly& f) {
    return f.map([](const Integer& z) { return Rational(z); });
}

inline FpPoly reduce_mod(const ZPoly& f, std::uint64_t p) {
    return f.map([p](const Integer& z) { return Fp::from_integer(z, p); });
}

/// Gcd of the coefficients (nonnegative); 0 for the zero polynomial.
inline Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

/// f / content(f), with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& f) {
    if (f.zero()) return f;
    Integer c = content(f);
    if (f.lc() < 0) c = -c;
    return f.exact_div_scalar(c);
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
inline ZPoly primitive_integer(const QPoly& f) {
    if (f.zero()) return {};
    Integer den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) out.push_back(Integer(c.get_num()) * exact_div(den, Integer(c.get_den())));
    return primitive_part(ZPoly(std::move(out)));
}

template <class T>
Poly<T> make_monic(const Poly<T>& f) {
    if (f.zero()) return f;
    return f * (one_like(f.lc()) / f.lc());
}

// --- printing -------------------------------------------------------------

template <class T>
std::string coeff_to_string(const T& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}
inline std::string coeff_to_string(const Integer& c) { return c.get_str(); }
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }

/// "2x^2+2x+2" style.
template <class T>
std::string to_string(const Poly<T>& f, const std::string& var = "x") {
    if (f.zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const T& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        std::string s = coeff_to_string(c);
        bool negative = !s.empty() && s[0] == '-';
        if (negative) s.erase(0, 1);
        if (!out.empty())
            out += negative ? "-" : "+";
        else if (negative)
            out += "-";
        if (i == 0)
            out += s;
        else {
            if (s != "1") out += s;
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace pscert
