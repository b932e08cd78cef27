#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pscert/powersum/regseq.hpp"

using namespace pscert;

namespace {

QPoly Q(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

ZPoly Z(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return ZPoly(std::move(v));
}

// Multiplicity of t in f by repeated exact division.
int multiplicity(ZPoly f, const ZPoly& t) {
    int m = 0;
    while (f.degree() > 0 && divides(t, f)) {
        f = exact_div(f, t);
        ++m;
    }
    return m;
}

// Nontrivial x-coordinates from the numeric oracle that also satisfy the third equation.
std::vector<oracle::cld> numeric_triple_x(int a, int b, int c) {
    std::vector<oracle::cld> xs;
    for (auto& s : oracle::solve_pair_system(a, b)) {
        oracle::cld f3 = 1.0L + std::pow(s.x, c) + std::pow(s.y, c);
        if (std::abs(f3) < 1e-8L && !oracle::is_trivial_x(s.x)) xs.push_back(s.x);
    }
    return xs;
}

}  // namespace

TEST(BuildPQ, Examples) {
    auto d2 = build_pq(2);
    EXPECT_EQ(d2.P, Z({2, 2, 2}));
    EXPECT_EQ(d2.C, Z({1, 1, 1}));
    EXPECT_EQ(d2.Q, Q({2}));
    auto d7 = build_pq(7);
    EXPECT_EQ(d7.C, Z({0, 1}) * Z({1, 1}) * Z({1, 1, 1}) * Z({1, 1, 1}));
    EXPECT_EQ(d7.Q.degree(), 0);
    EXPECT_EQ(build_pq(8).Q.degree(), 6);
    EXPECT_THROW(build_pq(1), DomainError);
}

TEST(BuildPQ, LeadingCoefficientsOf9And15) {
    auto q9 = q_primitive(build_pq(9)), q15 = q_primitive(build_pq(15));
    EXPECT_EQ(q9.degree(), 6);
    EXPECT_EQ(q9.lc(), 3);
    EXPECT_EQ(q15.degree(), 12);
    EXPECT_EQ(q15.lc(), 15);
}

TEST(Property, TrivialFactorLawUpTo200) {
    const ZPoly x = Z({0, 1}), x1 = Z({1, 1}), w = Z({1, 1, 1});
    // table of (mult x, mult x+1, mult x^2+x+1) by n mod 6
    const int table[6][3] = {{0, 0, 0}, {1, 1, 2}, {0, 0, 1}, {1, 1, 0}, {0, 0, 2}, {1, 1, 1}};
    for (int n = 2; n <= 200; ++n) {
        auto d = build_pq(n);
        ZPoly p = ZPoly(oracle::power_sum_poly(n));
        ASSERT_EQ(d.P, p);
        ASSERT_EQ(to_rational(d.C) * d.Q, to_rational(d.P)) << n;
        ASSERT_EQ(d.P.degree(), n % 2 == 0 ? n : n - 1);
        ASSERT_EQ(d.Q.degree() % 6, 0) << n;
        const int* row = table[n % 6];
        EXPECT_EQ(multiplicity(p, x), row[0]) << n;
        EXPECT_EQ(multiplicity(p, x1), row[1]) << n;
        EXPECT_EQ(multiplicity(p, w), row[2]) << n;
    }
}

TEST(PairZSet, Examples) {
    auto z = pair_zset(6, 10);
    EXPECT_TRUE(z.nontrivial_empty());
    EXPECT_FALSE(z.trivial.any());
    auto z35 = pair_zset(3, 5);
    EXPECT_TRUE(z35.nontrivial_empty());
    EXPECT_TRUE(z35.trivial.zero_minus_one);
    EXPECT_FALSE(z35.trivial.cube_roots);
    auto z25 = pair_zset(2, 5);
    EXPECT_TRUE(z25.nontrivial_empty());
    EXPECT_TRUE(z25.trivial.cube_roots);
    EXPECT_FALSE(z25.trivial.zero_minus_one);
}

TEST(PairZSet, NumericOracleForSixDivisiblePairs) {
    std::mt19937_64 rng(8);
    int checked = 0;
    while (checked < 15) {
        long b = 6 + static_cast<long>(rng() % 30), c = b + 1 + static_cast<long>(rng() % 20);
        if ((b * c) % 6 != 0) continue;
        auto db = build_pq(static_cast<int>(b)), dc = build_pq(static_cast<int>(c));
        if (db.Q.degree() == 0 || dc.Q.degree() == 0) continue;
        EXPECT_TRUE(pair_zset(b, c).nontrivial_empty());
        auto rb = oracle::roots(std::vector<mpz_class>(q_primitive(db).coeffs()));
        auto rc = oracle::roots(std::vector<mpz_class>(q_primitive(dc).coeffs()));
        EXPECT_TRUE(oracle::separated(oracle::min_cross_distance(rb, rc))) << b << "," << c;
        ++checked;
    }
}

TEST(PairZSet, CloseCallTenThirty) {
    // the closest root pair found among b < c <= 60; still far from a common root
    EXPECT_TRUE(pair_zset(10, 30).nontrivial_empty());
    auto r10 = oracle::roots(std::vector<mpz_class>(q_primitive(build_pq(10)).coeffs()));
    auto r30 = oracle::roots(std::vector<mpz_class>(q_primitive(build_pq(30)).coeffs()));
    long double d = oracle::min_cross_distance(r10, r30);
    EXPECT_LT(d, oracle::screen_distance);
    EXPECT_NEAR(static_cast<double>(d), 8.9869442790e-7, 1e-12);
    EXPECT_TRUE(oracle::separated(d));
}

TEST(TripleZSet, TwoThreeFourEmpty) {
    auto r = triple_zset(2, 3, 4);
    ASSERT_TRUE(std::holds_alternative<ZSet>(r));
    auto z = std::get<ZSet>(r);
    EXPECT_TRUE(z.nontrivial_empty());
    EXPECT_FALSE(z.trivial.any());
    // oracle: the (2,3) system has 6 solutions; none survives the third equation
    EXPECT_EQ(oracle::solve_pair_system(2, 3).size(), 6u);
    EXPECT_TRUE(numeric_triple_x(2, 3, 4).empty());
}

TEST(TripleZSet, TwoThreeFiveMatchesOracle) {
    auto r = triple_zset(2, 3, 5);
    ASSERT_TRUE(std::holds_alternative<ZSet>(r));
    auto z = std::get<ZSet>(r);
    auto xs = numeric_triple_x(2, 3, 5);
    EXPECT_EQ(z.nontrivial_empty(), xs.empty());
    for (auto x : xs) {
        oracle::cld v = 0;
        for (auto it = z.defining.coeffs().rbegin(); it != z.defining.coeffs().rend(); ++it)
            v = v * x + static_cast<long double>(it->get_d());
        EXPECT_LT(std::abs(v), 1e-6L);
    }
}

TEST(TripleZSet, CubeRootsStripped) {
    // none of 2, 4, 5 is divisible by 3, so x = w solves all three equations
    auto r = triple_zset(2, 4, 5);
    ASSERT_TRUE(std::holds_alternative<ZSet>(r));
    auto z = std::get<ZSet>(r);
    EXPECT_TRUE(z.trivial.cube_roots);
    EXPECT_EQ(gcd(z.defining, Q({1, 1, 1})).degree(), 0);
    EXPECT_EQ(z.nontrivial_empty(), numeric_triple_x(2, 4, 5).empty());
}

TEST(RegSeq3, RationalExamples) {
    auto v = regseq3_rational(1, 2, 5);
    EXPECT_EQ(v.verdict, RegSeq::NotRegular);
    EXPECT_EQ(v.trivial_witness, "{w,w^2}");
    EXPECT_EQ(regseq3_rational(1, 6, 100).verdict, RegSeq::Regular);
    auto v135 = regseq3_rational(1, 3, 5);
    EXPECT_EQ(v135.verdict, RegSeq::NotRegular);
    EXPECT_EQ(v135.trivial_witness, "{0,-1}");
}

TEST(RegSeq3, ModPExamples) {
    EXPECT_EQ(regseq3_mod_p(1, 6, 100, 4594399).verdict, RegSeq::NotRegular);
    EXPECT_EQ(regseq3_mod_p(1, 2, 3, 5).verdict, RegSeq::Regular);
    for (std::uint64_t p : {7ULL, 11ULL, 1009ULL}) {
        auto v = regseq3_mod_p(1, 3, 5, p);
        EXPECT_EQ(v.verdict, RegSeq::NotRegular);
        EXPECT_TRUE(v.trivial_witness.has_value());
    }
    EXPECT_THROW(regseq3_mod_p(1, 3, 5, 2), BadPrime);
    EXPECT_THROW(regseq3_mod_p(1, 3, 5, 5), BadPrime);
}

TEST(RegSeq2, Examples) {
    EXPECT_EQ(regseq2(1, 2).verdict, RegSeq::Regular);
    EXPECT_EQ(regseq2(1, 3).verdict, RegSeq::NotRegular);
    auto v = regseq2(2, 6);
    EXPECT_EQ(v.verdict, RegSeq::NotRegular);
    EXPECT_EQ(v.reduced, (std::vector<long>{1, 3}));
    EXPECT_EQ(regseq2(1, 2, 2).verdict, RegSeq::NotRegular);
}

TEST(Property, ScalingInvariance) {
    for (long a = 1; a <= 4; ++a)
        for (long b = a + 1; b <= 6; ++b)
            for (long c = b + 1; c <= 8; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                auto base = regseq3_rational(a, b, c);
                for (long k = 2; k <= 5; ++k) {
                    auto scaled = regseq3_rational(k * a, k * b, k * c);
                    ASSERT_EQ(scaled.reduced, (std::vector<long>{a, b, c}));
                    ASSERT_EQ(scaled.verdict, base.verdict);
                }
            }
}

TEST(Property, PairSweepConstantGcd) {
    for (long b = 2; b <= 40; ++b)
        for (long c = b + 1; c <= 40; ++c) {
            if ((b * c) % 2 != 0) continue;
            auto z = pair_zset(b, c);
            if ((b * c) % 6 == 0) {
                EXPECT_TRUE(z.nontrivial_empty()) << b << "," << c;
            }
            EXPECT_EQ(z.trivial.zero_minus_one, (b * c) % 2 != 0);
            EXPECT_EQ(z.trivial.cube_roots, (b * c) % 3 != 0);
        }
}

TEST(Property, RationalNonRegularPersistsModP) {
    std::mt19937_64 rng(12);
    const std::vector<std::uint64_t> primes{1009, 2003, 4001, 7919, 9973};
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        long a = 1 + static_cast<long>(rng() % 10);
        long b = a + 1 + static_cast<long>(rng() % 6);
        long c = b + 1 + static_cast<long>(rng() % 6);
        if (c > 12 || std::gcd(std::gcd(a, b), c) != 1) continue;
        auto q = regseq3_rational(a, b, c);
        if (q.verdict != RegSeq::NotRegular) continue;
        for (auto p : primes) {
            ASSERT_EQ(regseq3_mod_p(a, b, c, p).verdict, RegSeq::NotRegular) << a << "," << b << "," << c << " p=" << p;
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}
