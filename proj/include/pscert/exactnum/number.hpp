#pragma once

// Exact scalars: big integers and rationals (GMP), plus a few integer
// utilities shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pscert/exactnum/errors.hpp"

namespace pscert {

using Integer = mpz_class;
/// mpq_class keeps gcd(|num|, den) = 1 and den > 0 after every operation;
/// construction from a raw pair goes through make_rational.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", an integer, or a plain decimal such as "-2.5625".
inline Rational parse_rational(std::string_view text) {
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg || (!digits.empty() && digits[0] == '+')) digits.erase(0, 1);
        if ((digits.empty() && frac.empty()) ||
            (digits + frac).find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("not a rational: " + std::string(text));
        Integer num(digits + frac, 10), den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational q = make_rational(num, den);
        return neg ? Rational(-q) : q;
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational: " + std::string(text));
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return q;
}

// Exact division in an integral domain: the caller guarantees divisibility.
inline Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DomainError("division by zero");
    return a / b;
}

inline bool is_zero(const Integer& z) { return z == 0; }
inline bool is_zero(const Rational& q) { return q == 0; }

inline Integer abs_value(const Integer& z) { return abs(z); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// 64-bit modular helpers

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    ++n;
    while (!is_prime_u64(n)) ++n;
    return n;
}

inline std::uint64_t mod_of(const Integer& z, std::uint64_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace pscert
