#pragma once

// Regular-sequence decisions for power sums in three variables (over Q and
// over F_p) and in two variables.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pscert/powersum/zset.hpp"

namespace pscert {

enum class RegSeq { Regular, NotRegular, Unknown };

inline std::string to_string(RegSeq v) {
    switch (v) {
        case RegSeq::Regular: return "Regular";
        case RegSeq::NotRegular: return "NotRegular";
        default: return "Unknown";
    }
}

struct RegSeqVerdict {
    std::vector<long> exponents;
    std::vector<long> reduced;  // exponents divided by their gcd
    std::string field;          // "Q" or "F_p" with p spelled out
    RegSeq verdict = RegSeq::Unknown;
    std::optional<std::string> trivial_witness;  // e.g. "{0,-1}"
    std::optional<std::string> factor_witness;   // polynomial in x
    std::string note;
};

namespace detail {

inline std::vector<long> reduce_by_gcd(std::vector<long> e) {
    long d = 0;
    for (long v : e) d = std::gcd(d, v);
    for (long& v : e) v /= d;
    return e;
}

inline void check_increasing(const std::vector<long>& e) {
    if (e.empty() || e[0] <= 0) throw DomainError("exponents must be positive");
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] <= e[i - 1]) throw DomainError("exponents must be strictly increasing");
}

}  // namespace detail

/// p_a, p_b, p_c regular in C[x1,x2,x3]. Exponents are reduced by their gcd
/// first; the verdict is taken for the reduced triple.
inline RegSeqVerdict regseq3_rational(long a, long b, long c) {
    RegSeqVerdict v;
    v.exponents = {a, b, c};
    detail::check_increasing(v.exponents);
    v.reduced = detail::reduce_by_gcd(v.exponents);
    v.field = "Q";
    const long ra = v.reduced[0], rb = v.reduced[1], rc = v.reduced[2];
    TrivialFlags flags = trivial_flags(v.reduced);
    if (flags.zero_minus_one) {
        v.verdict = RegSeq::NotRegular;
        v.trivial_witness = "{0,-1}";
        return v;
    }
    if (flags.cube_roots) {
        v.verdict = RegSeq::NotRegular;
        v.trivial_witness = "{w,w^2}";
        return v;
    }
    QPoly defining;
    if (ra == 1) {
        defining = pair_zset(rb, rc).defining;
    } else {
        auto r = triple_zset(ra, rb, rc);
        if (auto* cand = std::get_if<CandidateReport>(&r)) {
            v.verdict = RegSeq::Unknown;
            v.note = cand->reason;
            return v;
        }
        defining = std::get<ZSet>(r).defining;
    }
    if (defining.degree() > 0) {
        v.verdict = RegSeq::NotRegular;
        v.factor_witness = to_string(defining);
    } else {
        v.verdict = RegSeq::Regular;
    }
    return v;
}

/// Same question over the algebraic closure of F_p. The projective plane is
/// covered by the chart z = 1, the line z = 0 with y = 1, and the point
/// (1:0:0), which never lies on x^a + y^a + z^a = 0.
inline RegSeqVerdict regseq3_mod_p(long a, long b, long c, std::uint64_t p) {
    RegSeqVerdict v;
    v.exponents = {a, b, c};
    detail::check_increasing(v.exponents);
    v.reduced = detail::reduce_by_gcd(v.exponents);
    v.field = "F_" + std::to_string(p);
    if (p == 2 || !is_prime_u64(p)) throw BadPrime("modulus must be an odd prime");
    for (long e : v.exponents)
        if (static_cast<std::uint64_t>(e) % p == 0) throw BadPrime("p divides an exponent");
    const Fp one(1, p);

    // line z = 0, y = 1
    auto xk1 = [&](long k) { return FpPoly::monomial(one, static_cast<std::size_t>(k)) + FpPoly(one); };
    FpPoly infinity = gcd(gcd(xk1(a), xk1(b)), xk1(c));

    // chart z = 1
    auto as_bivariate = [&](long k) { return Poly<FpPoly>(fermat_ypoly(k, one)); };
    FpPoly r1 = resultant(as_bivariate(a), as_bivariate(b));
    FpPoly r2 = resultant(as_bivariate(a), as_bivariate(c));
    if (r1.zero() || r2.zero()) throw std::logic_error("Fermat curves share a component");
    FpPoly g = gcd(r1, r2);
    std::vector<YGcdBranch<Fp>> branches;
    if (g.degree() > 0)
        branches = ygcd_over_quotient(squarefree_part_simple(g),
                                      {fermat_ypoly(a, one), fermat_ypoly(b, one), fermat_ypoly(c, one)});
    const FpPoly trivial = reduce_mod(poly_x_z() * poly_x_plus_1() * poly_cyclotomic3(), p);
    std::vector<FpPoly> trivial_hits, other_hits;
    for (const auto& br : branches) {
        if (br.gcd.size() < 2) continue;
        (divides(br.modulus, trivial) ? trivial_hits : other_hits).push_back(br.modulus);
    }
    if (infinity.degree() > 0) v.note = "zeros on z=0, y=1 where " + to_string(infinity) + " = 0";
    if (trivial_hits.empty() && other_hits.empty() && infinity.degree() <= 0) {
        v.verdict = RegSeq::Regular;
        return v;
    }
    v.verdict = RegSeq::NotRegular;
    if (!other_hits.empty()) {
        FpPoly prod(one);
        for (auto& h : other_hits) prod = prod * h;
        v.factor_witness = to_string(prod);
    }
    if (!trivial_hits.empty()) {
        FpPoly prod(one);
        for (auto& h : trivial_hits) prod = prod * h;
        v.trivial_witness = to_string(prod);
    }
    if (!v.factor_witness && !v.trivial_witness) v.factor_witness = "z=0,y=1: " + to_string(infinity);
    return v;
}

/// p_a, p_b in two variables over a field of the given characteristic
/// (0 or a prime): regular iff the characteristic is not 2 and one of
/// a/d, b/d is even, d = gcd(a, b).
inline RegSeqVerdict regseq2(long a, long b, std::uint64_t characteristic = 0) {
    if (a <= 0 || b <= 0 || a == b) throw DomainError("regseq2 needs distinct positive exponents");
    if (characteristic != 0 && !is_prime_u64(characteristic)) throw BadPrime("characteristic must be 0 or prime");
    RegSeqVerdict v;
    v.exponents = {a, b};
    v.reduced = detail::reduce_by_gcd(v.exponents);
    v.field = characteristic == 0 ? "Q" : "F_" + std::to_string(characteristic);
    if (characteristic == 2) {
        v.verdict = RegSeq::NotRegular;
        v.trivial_witness = "(1,1) in characteristic 2";
        return v;
    }
    if (v.reduced[0] % 2 == 0 || v.reduced[1] % 2 == 0) {
        v.verdict = RegSeq::Regular;
    } else {
        v.verdict = RegSeq::NotRegular;
        v.trivial_witness = "(1,-1)";
    }
    return v;
}

}  // namespace pscert
