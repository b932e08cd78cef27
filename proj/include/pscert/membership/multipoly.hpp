#pragma once

// Sparse multivariate polynomials over Q, with a small expression parser for
// command-line input ("p5", "p2^2 - 2*x1*x2", ...).

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pscert/exactnum/errors.hpp"
#include "pscert/exactnum/number.hpp"

namespace pscert {

using Monomial = std::vector<int>;

class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 1) : n_(nvars) {
        if (nvars == 0) throw DomainError("MultiPoly needs at least one variable");
    }

    static MultiPoly constant(std::size_t nvars, const Rational& c) {
        MultiPoly p(nvars);
        p.add_term(Monomial(nvars, 0), c);
        return p;
    }
    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DomainError("variable index out of range");
        MultiPoly p(nvars);
        Monomial m(nvars, 0);
        m[i] = 1;
        p.add_term(m, 1);
        return p;
    }
    static MultiPoly monomial(const Monomial& m, const Rational& c = 1) {
        MultiPoly p(m.size());
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != n_) throw RingMismatch("monomial length differs from variable count");
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    /// Total degree when every term has the same degree; nullopt otherwise
    /// (and for the zero polynomial).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : t_) {
            int s = 0;
            for (int e : m) s += e;
            if (d && *d != s) return std::nullopt;
            d = s;
        }
        return d;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.n_) - a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.n_);
        Monomial m(a.n_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
        MultiPoly r(a.n_);
        for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(n_, 1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

private:
    void check(const MultiPoly& o) const {
        if (o.n_ != n_) throw RingMismatch("polynomials in different numbers of variables");
    }

    std::size_t n_;
    std::map<Monomial, Rational> t_;
};

/// x_1^a + ... + x_n^a
inline MultiPoly power_sum(std::size_t n, int a) {
    if (n < 1 || a < 1) throw DomainError("power_sum needs n >= 1 and a >= 1");
    MultiPoly p(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = a;
        p.add_term(m, 1);
    }
    return p;
}

/// Terms in decreasing graded-lex order, e.g. "x1^3 + x2^3".
inline std::string to_string(const MultiPoly& p) {
    if (p.zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    auto deg = [](const Monomial& m) {
        int s = 0;
        for (int e : m) s += e;
        return s;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
        if (deg(x.first) != deg(y.first)) return deg(x.first) > deg(y.first);
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [m, c] : terms) {
        Rational mag = abs(c);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

namespace detail {

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := ('-')? atom ('^' int)? ; atom := int | 'x'['_']k | 'p'['_']k | '(' expr ')'
class MultiPolyParser {
public:
    MultiPolyParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

    MultiPoly parse() {
        MultiPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse polynomial at position " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    long number() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        if (i_ - start > 9) fail("number too large");
        return std::stol(std::string(s_.substr(start, i_ - start)));
    }
    MultiPoly expr() {
        MultiPoly r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    MultiPoly term() {
        MultiPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    MultiPoly factor() {
        if (eat('-')) return -factor();
        MultiPoly r = atom();
        if (eat('^')) r = r.pow(static_cast<unsigned>(number()));
        return r;
    }
    MultiPoly atom() {
        skip();
        if (eat('(')) {
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == 'x' || c == 'p') {
            ++i_;
            if (i_ < s_.size() && s_[i_] == '_') ++i_;
            long k = number();
            if (c == 'p') return power_sum(n_, static_cast<int>(k));
            if (k < 1 || static_cast<std::size_t>(k) > n_) fail("variable index out of range");
            return MultiPoly::variable(n_, static_cast<std::size_t>(k - 1));
        }
        return MultiPoly::constant(n_, number());
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline MultiPoly parse_multipoly(std::string_view text, std::size_t nvars) {
    return detail::MultiPolyParser(text, nvars).parse();
}

}  // namespace pscert
