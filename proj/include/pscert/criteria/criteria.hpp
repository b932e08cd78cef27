#pragma once

// Arithmetic predicates on exponent sets: p-adic valuations, the factorial
// divisibility condition, the conjectured n = 4 conditions, normality of
// S/(p_a, p_b) in four variables, and the roots-of-unity lemma with exact
// witnesses.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pscert/exactnum/number.hpp"
#include "pscert/exactnum/unity.hpp"

namespace pscert {

/// Largest e with p^e | n.
inline int nu(long p, long n) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw DomainError("nu needs a prime p");
    if (n < 1) throw DomainError("nu needs n >= 1");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

class ExponentSet {
public:
    explicit ExponentSet(std::vector<long> entries) : e_(std::move(entries)) {
        std::sort(e_.begin(), e_.end());
        if (e_.empty()) throw DomainError("empty exponent set");
        if (e_.front() <= 0) throw DomainError("exponents must be positive");
        if (std::adjacent_find(e_.begin(), e_.end()) != e_.end()) throw DomainError("exponents must be distinct");
    }
    const std::vector<long>& entries() const { return e_; }
    std::size_t size() const { return e_.size(); }
    long gcd() const {
        long g = 0;
        for (long v : e_) g = std::gcd(g, v);
        return g;
    }

private:
    std::vector<long> e_;
};

struct ConditionDetail {
    std::string name;
    bool holds = false;
    std::string explanation;
};

using CriterionWitness = std::variant<std::vector<UnityRoot>, std::vector<long>>;

struct CriterionResult {
    std::string name;
    bool holds = false;
    std::vector<ConditionDetail> details;
    std::optional<CriterionWitness> witness;
    std::string label;  // e.g. "conjectural criterion"
};

/// n! divides a_1 a_2 ... a_n.
inline CriterionResult factorial_divisibility(const ExponentSet& A) {
    Integer product = 1, factorial = 1;
    for (long v : A.entries()) product *= v;
    for (std::size_t i = 2; i <= A.size(); ++i) factorial *= static_cast<unsigned long>(i);
    CriterionResult r;
    r.name = "factorial_divisibility";
    r.holds = product % factorial == 0;
    r.details.push_back({"n! | product", r.holds, factorial.get_str() + " | " + product.get_str()});
    return r;
}

/// The three conditions conjectured to characterize regular sequences of
/// four power sums. Only the conditions are evaluated.
inline CriterionResult conjecture4_conditions(const ExponentSet& A) {
    if (A.size() != 4) throw DomainError("conjecture4_conditions needs exactly four exponents");
    if (A.gcd() != 1) throw GcdNotOne("exponent set must have gcd 1");
    const auto& e = A.entries();
    CriterionResult r;
    r.name = "conjecture4_conditions";
    r.label = "conjectural criterion";

    Integer product = 1;
    for (long v : e) product *= v;
    const bool c1 = product % 24 == 0;
    r.details.push_back({"24 | product", c1, "product = " + product.get_str()});

    std::set<int> positive;
    std::string vals;
    for (long v : e) {
        int k = nu(2, v);
        if (k > 0) positive.insert(k);
        vals += (vals.empty() ? "" : ",") + std::to_string(k);
    }
    const bool c2 = positive.size() >= 2;
    r.details.push_back({"two distinct positive 2-adic valuations", c2, "nu_2 = {" + vals + "}"});

    std::optional<std::vector<long>> offending;
    for (long d : e) {
        auto has = [&](long v) { return std::binary_search(e.begin(), e.end(), v); };
        if (has(2 * d) && has(5 * d)) {
            offending = std::vector<long>{d, 2 * d, 5 * d};
            break;
        }
    }
    const bool c3 = !offending;
    r.details.push_back({"no subset {d,2d,5d}", c3,
                         offending ? "subset {" + std::to_string((*offending)[0]) + "," + std::to_string((*offending)[1]) +
                                         "," + std::to_string((*offending)[2]) + "}"
                                   : "none"});
    if (offending) r.witness = *offending;
    r.holds = c1 && c2 && c3;
    return r;
}

/// Normality of C[x1..x4]/(p_a, p_b).
inline CriterionResult normal4(long a, long b) {
    if (a < 1 || b <= a) throw DomainError("normal4 needs 1 <= a < b");
    CriterionResult r;
    r.name = "normal4";
    if (a == 1) {
        r.holds = b % 2 == 0;
        r.details.push_back({"b even", r.holds, "b = " + std::to_string(b)});
        return r;
    }
    const int a2 = nu(2, a), b2 = nu(2, b), a3 = nu(3, a), b3 = nu(3, b), d3 = nu(3, b - a);
    const bool c1 = a2 != b2;
    const bool c2 = a3 != b3 || (a3 == b3 && b3 == d3);
    r.details.push_back({"nu_2(a) != nu_2(b)", c1, std::to_string(a2) + " vs " + std::to_string(b2)});
    r.details.push_back({"nu_3(a) != nu_3(b) or nu_3(a) = nu_3(b) = nu_3(b-a)", c2,
                         std::to_string(a3) + ", " + std::to_string(b3) + ", " + std::to_string(d3)});
    r.holds = c1 && c2;
    return r;
}

namespace detail {

inline long long ipow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace detail

/// Exact check of a case-`which` tuple: every entry satisfies x^(b-a) = 1
/// and 1 + sum of x^a vanishes.
inline bool verify_roots_of_unity_witness(int which, long a, long b, const std::vector<UnityRoot>& w) {
    if (w.size() != static_cast<std::size_t>(which)) return false;
    const long d = std::labs(b - a);
    std::vector<UnityRoot> terms{UnityRoot()};
    for (const auto& x : w) {
        if (!x.pow(d).is_one()) return false;
        terms.push_back(x.pow(a));
    }
    return sum_is_zero(std::span<const UnityRoot>(terms));
}

/// The three cases of the roots-of-unity lemma for (a, b):
///   1: alpha^(b-a) = 1, alpha^a + 1 = 0                 iff nu_2(a) = nu_2(b)
///   2: alpha, beta with alpha^a + beta^a + 1 = 0         iff nu_3(a) = nu_3(b) < nu_3(b-a)
///   3: alpha, beta, gamma with alpha^a+beta^a+gamma^a+1 = 0  iff nu_2(a) = nu_2(b)
/// (all entries with x^(b-a) = 1). A holding predicate carries a witness
/// of minimal order that has been verified exactly.
inline CriterionResult roots_of_unity_case(int which, long a, long b) {
    if (which < 1 || which > 3) throw DomainError("case must be 1, 2 or 3");
    if (a < 1 || b < 1 || a == b) throw DomainError("roots_of_unity_case needs distinct positive a, b");
    CriterionResult r;
    r.name = "roots_of_unity_case_" + std::to_string(which);
    if (which == 2) {
        const int e = nu(3, a), f = nu(3, b), g = nu(3, std::labs(b - a));
        r.holds = e == f && f < g;
        r.details.push_back({"nu_3(a) = nu_3(b) < nu_3(b-a)", r.holds,
                             std::to_string(e) + ", " + std::to_string(f) + ", " + std::to_string(g)});
        if (r.holds) {
            UnityRoot alpha(detail::ipow(3, e + 1), 1);  // alpha^(3^e) = w
            r.witness = std::vector<UnityRoot>{alpha, alpha.pow(2)};
        }
    } else {
        const int e = nu(2, a), f = nu(2, b);
        r.holds = e == f;
        r.details.push_back({"nu_2(a) = nu_2(b)", r.holds, std::to_string(e) + ", " + std::to_string(f)});
        if (r.holds) {
            UnityRoot alpha(detail::ipow(2, e + 1), 1);  // alpha^(2^e) = -1
            if (which == 1)
                r.witness = std::vector<UnityRoot>{alpha};
            else
                r.witness = std::vector<UnityRoot>{alpha, alpha.pow(2), alpha};
        }
    }
    if (r.witness) {
        const auto& w = std::get<std::vector<UnityRoot>>(*r.witness);
        if (!verify_roots_of_unity_witness(which, a, b, w)) throw std::logic_error("constructed witness fails its equations");
    }
    return r;
}

}  // namespace pscert
