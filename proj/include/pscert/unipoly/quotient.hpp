#pragma once

// Arithmetic in K[x]/(q) for a squarefree q over a field K, with dynamic
// splitting: when an element turns out not to be invertible, the modulus is
// split along the gcd and the caller continues on each branch.

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "pscert/unipoly/gcd.hpp"

namespace pscert {

template <class T>
class QuotientElem {
public:
    QuotientElem(Poly<T> rep, Poly<T> modulus) : mod_(std::move(modulus)) {
        if (mod_.degree() < 1) throw DomainError("quotient modulus must have positive degree");
        rep_ = rem(rep, mod_);
    }

    const Poly<T>& rep() const { return rep_; }
    const Poly<T>& modulus() const { return mod_; }
    bool zero() const { return rep_.zero(); }

    friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
        check(a, b);
        return {a.rep_ + b.rep_, a.mod_};
    }
    friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
        check(a, b);
        return {a.rep_ - b.rep_, a.mod_};
    }
    friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
        check(a, b);
        return {a.rep_ * b.rep_, a.mod_};
    }
    friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
        return a.mod_ == b.mod_ && a.rep_ == b.rep_;
    }

private:
    static void check(const QuotientElem& a, const QuotientElem& b) {
        if (!(a.mod_ == b.mod_)) throw RingMismatch("quotient elements with different moduli");
    }
    Poly<T> rep_;
    Poly<T> mod_;
};

/// Nontrivial factorization modulus = first * second (both monic).
template <class T>
struct Split {
    Poly<T> first;   // gcd(representative, modulus): where the element vanishes
    Poly<T> second;  // cofactor: where it is invertible
};

namespace detail {

// s with s*a = gcd(a, m) mod m; returns (gcd monic, s).
template <class T>
std::pair<Poly<T>, Poly<T>> half_extended_gcd(const Poly<T>& a, const Poly<T>& m) {
    Poly<T> r0 = m, r1 = a, s0, s1(one_like(m.lc()));
    while (!r1.zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<T> s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const T inv = one_like(r0.lc()) / r0.lc();
    return {r0 * inv, s0 * inv};
}

}  // namespace detail

template <class T>
using InverseOrSplit = std::variant<QuotientElem<T>, Split<T>>;

template <class T>
InverseOrSplit<T> inverse_or_split(const QuotientElem<T>& a) {
    const Poly<T>& m = a.modulus();
    if (a.zero()) return Split<T>{make_monic(m), Poly<T>(one_like(m.lc()))};
    auto [g, s] = detail::half_extended_gcd(a.rep(), m);
    if (g.degree() == 0) return QuotientElem<T>(s, m);
    return Split<T>{g, make_monic(exact_div(m, g))};
}

/// A polynomial in y with coefficients in K[x] (constant term first),
/// interpreted modulo a modulus in x.
template <class T>
using YPoly = std::vector<Poly<T>>;

template <class T>
struct YGcdBranch {
    Poly<T> modulus;  // factor of the original modulus
    YPoly<T> gcd;     // monic in y over K[x]/(modulus); empty if both inputs vanish
};

namespace detail {

template <class T>
void reduce_trim(YPoly<T>& f, const Poly<T>& m) {
    for (auto& c : f) c = rem(c, m);
    while (!f.empty() && f.back().zero()) f.pop_back();
}

template <class T>
void ygcd_rec(const Poly<T>& m, YPoly<T> a, YPoly<T> b, std::vector<YGcdBranch<T>>& out) {
    if (m.degree() < 1) return;
    reduce_trim(a, m);
    reduce_trim(b, m);
    if (a.size() < b.size()) std::swap(a, b);
    for (;;) {
        if (b.empty()) {
            if (a.empty()) {
                out.push_back({m, {}});
                return;
            }
            auto inv = inverse_or_split(QuotientElem<T>(a.back(), m));
            if (auto* sp = std::get_if<Split<T>>(&inv)) {
                ygcd_rec(sp->first, a, {}, out);
                ygcd_rec(sp->second, a, {}, out);
                return;
            }
            const Poly<T>& u = std::get<QuotientElem<T>>(inv).rep();
            for (auto& c : a) c = rem(c * u, m);
            out.push_back({m, std::move(a)});
            return;
        }
        auto inv = inverse_or_split(QuotientElem<T>(b.back(), m));
        if (auto* sp = std::get_if<Split<T>>(&inv)) {
            ygcd_rec(sp->first, a, b, out);
            ygcd_rec(sp->second, a, b, out);
            return;
        }
        const Poly<T>& u = std::get<QuotientElem<T>>(inv).rep();
        // a <- a mod b
        while (a.size() >= b.size()) {
            const std::size_t shift = a.size() - b.size();
            Poly<T> factor = rem(a.back() * u, m);
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = rem(a[shift + j] - factor * b[j], m);
            if (!a.back().zero()) throw std::logic_error("quotient division left a nonzero leading term");
            while (!a.empty() && a.back().zero()) a.pop_back();
        }
        std::swap(a, b);
    }
}

}  // namespace detail

/// Gcd in y of several y-polynomials over K[x]/(m), splitting m as needed.
/// The branch moduli multiply to make_monic(m) and on each branch the
/// returned gcd specializes correctly at every root of that branch modulus.
template <class T>
std::vector<YGcdBranch<T>> ygcd_over_quotient(const Poly<T>& m, const std::vector<YPoly<T>>& polys) {
    std::vector<YGcdBranch<T>> branches{{make_monic(m), {}}};
    for (const auto& f : polys) {
        std::vector<YGcdBranch<T>> next;
        for (const auto& br : branches) detail::ygcd_rec(br.modulus, br.gcd, f, next);
        branches = std::move(next);
    }
    return branches;
}

}  // namespace pscert
