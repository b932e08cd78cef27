#pragma once

// Exact roots of unity and exact vanishing tests for integer combinations
// of them.

#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pscert/exactnum/interval.hpp"

namespace pscert {

/// exp(2*pi*i * exponent / order), kept in lowest terms.
class UnityRoot {
public:
    UnityRoot() = default;  // 1
    UnityRoot(long long order, long long exponent) {
        if (order <= 0) throw std::invalid_argument("root of unity needs positive order");
        long long j = exponent % order;
        if (j < 0) j += order;
        long long g = std::gcd(j, order);
        if (j == 0) {
            order_ = 1;
            exponent_ = 0;
        } else {
            order_ = order / g;
            exponent_ = j / g;
        }
    }

    static UnityRoot minus_one() { return {2, 1}; }
    static UnityRoot omega() { return {3, 1}; }

    long long order() const { return order_; }
    long long exponent() const { return exponent_; }
    bool is_one() const { return order_ == 1; }

    friend UnityRoot operator*(const UnityRoot& a, const UnityRoot& b) {
        long long l = std::lcm(a.order_, b.order_);
        return {l, a.exponent_ * (l / a.order_) + b.exponent_ * (l / b.order_)};
    }
    UnityRoot pow(long long n) const {
        long long e = static_cast<long long>((static_cast<__int128>(exponent_) * (n % order_)) % order_);
        return {order_, e};
    }
    UnityRoot inverse() const { return {order_, -exponent_}; }
    UnityRoot operator-() const { return *this * minus_one(); }

    friend bool operator==(const UnityRoot&, const UnityRoot&) = default;
    friend auto operator<=>(const UnityRoot&, const UnityRoot&) = default;

    ComplexBox enclosure(Precision prec) const {
        RealInterval angle = RealInterval::pi(prec) * RealInterval::point(make_rational(2 * exponent_, order_), prec);
        return {cos(angle), sin(angle)};
    }

    friend std::ostream& operator<<(std::ostream& os, const UnityRoot& u) {
        return os << "e(" << u.exponent_ << "/" << u.order_ << ")";
    }

private:
    long long order_ = 1;
    long long exponent_ = 0;
};

namespace detail {

inline std::vector<std::pair<long long, int>> factor_small(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long long inverse_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, r = a % m;
    if (r < 0) r += m;
    while (r) {
        long long q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::logic_error("inverse_mod of non-unit");
    return ((x % m) + m) % m;
}

}  // namespace detail

/// Integer linear combination of roots of unity, as a coordinate vector in
/// Q(zeta_L) = (x) Q(zeta_q) over the prime-power factors q of L, each factor
/// carrying the power basis {zeta_q^t : t < phi(q)} modulo Phi_q.
class CyclotomicSum {
public:
    explicit CyclotomicSum(std::span<const std::pair<long long, UnityRoot>> terms) {
        long long l = 1;
        for (const auto& t : terms) l = std::lcm(l, t.second.order());
        order_ = l;
        for (auto [p, e] : detail::factor_small(l)) {
            long long q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            factors_.push_back({p, q, q / p * (p - 1), detail::inverse_mod((l / q) % q, q)});
        }
        for (const auto& [coeff, root] : terms) {
            if (coeff == 0) continue;
            long long exponent = root.exponent() * (l / root.order());
            accumulate(exponent, coeff);
        }
        for (auto it = coords_.begin(); it != coords_.end();) it = it->second == 0 ? coords_.erase(it) : std::next(it);
    }

    bool is_zero() const { return coords_.empty(); }
    long long field_order() const { return order_; }

private:
    struct PrimePower {
        long long p, q, phi, crt_inverse;
    };

    // zeta_L^E -> product over q of zeta_q^{x_q}, x_q = E * (L/q)^{-1} mod q,
    // each factor reduced into the power basis.
    void accumulate(long long exponent, long long coeff) {
        std::vector<std::vector<std::pair<std::uint32_t, long long>>> parts;
        for (const auto& f : factors_) {
            long long x = static_cast<long long>((static_cast<__int128>(exponent % f.q) * f.crt_inverse) % f.q);
            std::vector<std::pair<std::uint32_t, long long>> v;
            if (x < f.phi) {
                v.emplace_back(static_cast<std::uint32_t>(x), 1);
            } else {
                long long step = f.q / f.p;
                long long s = x - f.phi;
                for (long long t = 0; t + 1 < f.p; ++t) v.emplace_back(static_cast<std::uint32_t>(t * step + s), -1);
            }
            parts.push_back(std::move(v));
        }
        std::vector<std::uint32_t> key(parts.size());
        expand(parts, 0, key, coeff);
    }

    void expand(const std::vector<std::vector<std::pair<std::uint32_t, long long>>>& parts, std::size_t i,
                std::vector<std::uint32_t>& key, long long coeff) {
        if (i == parts.size()) {
            coords_[key] += coeff;
            return;
        }
        for (const auto& [idx, c] : parts[i]) {
            key[i] = idx;
            expand(parts, i + 1, key, coeff * c);
        }
    }

    long long order_ = 1;
    std::vector<PrimePower> factors_;
    std::map<std::vector<std::uint32_t>, long long> coords_;
};

/// Exact decision: does sum(coeff_i * root_i) vanish?
inline bool sum_is_zero(std::span<const std::pair<long long, UnityRoot>> terms) {
    return CyclotomicSum(terms).is_zero();
}

inline bool sum_is_zero(std::span<const UnityRoot> roots) {
    std::vector<std::pair<long long, UnityRoot>> terms;
    terms.reserve(roots.size());
    for (const auto& r : roots) terms.emplace_back(1, r);
    return sum_is_zero(std::span<const std::pair<long long, UnityRoot>>(terms));
}

inline bool sum_is_zero(std::initializer_list<UnityRoot> roots) {
    return sum_is_zero(std::span<const UnityRoot>(roots.begin(), roots.size()));
}

}  // namespace pscert
