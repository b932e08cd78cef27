#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "pscert/exactnum/number.hpp"

namespace pscert {

/// Element of the prime field F_p, p < 2^63.
///
/// The modulus travels with the value. A default-constructed element is the
/// "unbound" zero (modulus 0): it adopts the modulus of whatever it is
/// combined with, so generic polynomial code can zero-initialize buffers
/// without a ring context. Two bound operands with different moduli throw
/// RingMismatch.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t residue, std::uint64_t modulus) : v_(residue % modulus), p_(modulus) {}
    static Fp from_integer(const Integer& z, std::uint64_t modulus) { return Fp(mod_of(z, modulus), modulus); }
    static Fp from_signed(long long z, std::uint64_t modulus) {
        long long r = z % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return Fp(static_cast<std::uint64_t>(r), modulus);
    }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }

    friend bool is_zero(const Fp& a) { return a.v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return {};
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return {};
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (p - b.v_), p);
    }
    friend Fp operator-(const Fp& a) {
        if (a.v_ == 0) return a;
        return raw(a.p_ - a.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return {};
        return raw(mulmod(a.v_, b.v_, p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && (a.v_ == 0 || a.p_ == b.p_); }

    Fp inverse() const {
        if (v_ == 0) throw DomainError("inverse of zero in F_p");
        return raw(powmod(v_, p_ - 2, p_), p_);
    }
    Fp pow(std::uint64_t e) const { return raw(powmod(v_, e, p_), p_); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static std::uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0 || b.p_ == a.p_) return a.p_;
        throw RingMismatch("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }

}  // namespace pscert
