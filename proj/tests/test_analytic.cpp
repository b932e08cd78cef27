#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pscert/analytic/bounds.hpp"

using namespace pscert;

namespace {

const Rational fine = make_rational(Integer(1), Integer(1) << 140);

RealInterval dec(const char* s, Precision p = 256) { return RealInterval::parse(s, p); }

ComplexBox eval_box(const ZPoly& f, const ComplexBox& z) {
    const Precision p = z.prec();
    ComplexBox acc = ComplexBox::point(0, 0, p);
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * z + ComplexBox::point(Rational(f.coeffs()[static_cast<std::size_t>(i)]), 0, p);
    return acc;
}

// log of the stated lower bound in long double (the value itself underflows)
long double lmn_log_oracle(long double d, long double dh, long double k) {
    long double m = std::max(34.0L, d * std::log(k / 2) + 10);
    return -(9.0L / 8) * (22 * 3.14159265358979323846L + dh) * m * m;
}

long double f_log_sq(long double c) { return c / (std::log(c) * std::log(c)); }

}  // namespace

TEST(SegmentRoots, EightHasOneRoot) {
    auto roots = isolate_segment_roots(8, make_rational(1, 1000000000000LL));
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_TRUE(roots[0].t.certainly_greater(dec("2.513228157188") - make_rational(1, 1000000000)));
    EXPECT_TRUE(roots[0].t.certainly_less(dec("2.513228157188") + make_rational(1, 1000000000)));
    EXPECT_TRUE(roots[0].t.certainly_greater(sqrt(RealInterval::point(3, 128)) / 2));
}

TEST(SegmentRoots, SevenIsEmpty) { EXPECT_TRUE(isolate_segment_roots(7, fine).empty()); }

TEST(SegmentRoots, TwelveHasTwo) {
    auto roots = isolate_segment_roots(12, fine);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_TRUE(abs(roots.back().orbit[0]).certainly_ge(make_rational(383, 100)));
}

TEST(MaxModulus, Examples) {
    RealInterval r8 = max_modulus(8, fine);
    EXPECT_TRUE(r8.certainly_ge(make_rational(25624, 10000)));
    EXPECT_TRUE(r8.certainly_le(make_rational(25626, 10000)));
    // derived: sqrt(1/4 + t^2) from the printed t
    long double t = 2.513228157188L;
    EXPECT_NEAR(r8.mid_double(), static_cast<double>(std::sqrt(0.25L + t * t)), 1e-9);
    EXPECT_TRUE(max_modulus(6, fine).certainly_greater(make_rational(14, 9)));
}

TEST(MaxModulus, ThresholdsForLargerB) {
    for (int b = 17; b <= 42; ++b) EXPECT_TRUE(max_modulus(b, fine).certainly_ge(make_rational(272, 100))) << b;
    for (int b : {12, 14, 16}) EXPECT_TRUE(max_modulus(b, fine).certainly_ge(make_rational(383, 100))) << b;
}

TEST(Bound149, FourteenNinths) {
    auto rep = bound_14_9_at_modulus(make_rational(14, 9));
    EXPECT_EQ(rep.verdict, BoundVerdict::Satisfied);
    EXPECT_TRUE(rep.value.certainly_greater(make_rational(4885, 10000)));
    EXPECT_TRUE(rep.value.certainly_less(make_rational(4890, 10000)));
    // exact: t^2 = 703/324 makes the contribution rational
    Rational t2 = make_rational(703, 324), u = t2 - make_rational(3, 4), v = t2 + make_rational(1, 4);
    EXPECT_TRUE(rep.value.contains(u * u * u / (v * v)));
}

TEST(Bound149, EightRootAndBoundary) {
    auto roots = isolate_segment_roots(8, fine);
    auto rep = bound_14_9(roots[0].t);
    EXPECT_EQ(rep.verdict, BoundVerdict::Violated);
    EXPECT_TRUE(rep.value.certainly_greater(make_rational(1, 2)));
    auto edge = bound_14_9_t2(RealInterval::point(make_rational(3, 4) + make_rational(1, 1000000000), 128));
    EXPECT_EQ(edge.verdict, BoundVerdict::Satisfied);
    EXPECT_TRUE(edge.value.certainly_less(make_rational(1, 1000000000)));
    EXPECT_THROW(bound_14_9_t2(RealInterval::point(make_rational(3, 4), 128)), DomainError);
}

TEST(CSmall, Examples) {
    auto r8 = max_modulus(8, fine);
    auto rep = c_small_threshold(r8, 8);
    EXPECT_GE(*rep.integer_value, 2500);
    auto r43 = c_small_threshold(make_rational(14, 9), 43);
    EXPECT_TRUE(r43.value.certainly_greater(Rational(1000000)));
    long double o43 = 1.5707963267948966L * std::pow(14.0L / 9, 43.0L);
    EXPECT_NEAR(r43.value.mid_double() / static_cast<double>(o43), 1.0, 1e-12);
    auto r17 = c_small_threshold(make_rational(272, 100), 17);
    long double o17 = 1.5707963267948966L * std::pow(2.72L, 17.0L);
    EXPECT_NEAR(r17.value.mid_double() / static_cast<double>(o17), 1.0, 1e-12);
    EXPECT_THROW(c_small_threshold(make_rational(3, 2), 8), DomainError);
}

TEST(LMN, Formula) {
    RealInterval h0 = RealInterval::point(0, 128);
    RealInterval v = lmn_lower(1, h0, 2);
    long double lo = lmn_log_oracle(1, 0, 2);
    EXPECT_NEAR(log(v).mid_double(), static_cast<double>(lo), 1e-9 * std::fabs(static_cast<double>(lo)));
    // exact branch: exp(-(9/8) 22 pi 1156)
    RealInterval direct = exp(-(RealInterval::pi(128) * 22 * 1156 * make_rational(9, 8)));
    EXPECT_TRUE(v.overlaps(direct));
}

TEST(LMN, InstanceForBEight) {
    RealInterval r = max_modulus(8, fine);
    HeightBound hb = height_bound_a1(8, r);
    for (long c : {3000L, 100000L, 4000000L}) {
        // degree 6 with the same dh
        RealInterval ours = lmn_lower(6, hb.dh / 6, Integer(2 * c));
        long double m = std::max(34.0L, 8 * std::log(static_cast<long double>(c)) + 10);
        long double stated = -(9.0L / 8) * (70 + (8.0L / 3) * std::log(r.mid_double())) * m * m;
        EXPECT_GE(log(ours).lo_double(), static_cast<double>(stated)) << c;
    }
}

TEST(LMN, MonotoneInK) {
    RealInterval h = RealInterval::point(make_rational(1, 3), 128);
    RealInterval prev = lmn_lower(5, h, 1);
    for (long k = 2; k < 2000000; k = k * 3 + 1) {
        RealInterval cur = lmn_lower(5, h, k);
        EXPECT_FALSE(cur.certainly_greater(prev)) << k;
        prev = cur;
    }
}

TEST(LMN3, Examples) {
    auto rep = lmn3_c_max(8);
    EXPECT_GE(*rep.integer_value, 4500000);
    EXPECT_LE(*rep.integer_value, 5500000);
    EXPECT_EQ(rep.inputs[1].second, Rational(Rational(320 * 64) + make_rational(1024, 3)).get_str());
    // oracle: the bracket is tight at the returned integer
    long double rhs = 320.0L * 64 + 1024.0L / 3, c = rep.integer_value->get_d();
    EXPECT_LE(f_log_sq(c), rhs);
    EXPECT_GT(f_log_sq(c + 1), rhs);

    auto lo43 = c_small_threshold(make_rational(14, 9), 43);
    auto r43 = lmn3_c_max(43, lo43.integer_value);
    EXPECT_EQ(r43.verdict, BoundVerdict::Violated);
}

TEST(GeneralBounds, AEqualsTwo) {
    auto other = general_bounds(2, ParityProfile::Other);
    auto one = general_bounds(2, ParityProfile::ExactlyOneEven);
    EXPECT_EQ(*other[0].integer_value, 9600);
    EXPECT_EQ(*one[0].integer_value, 2400);
    EXPECT_TRUE(other[1].value.overlaps(exp(RealInterval::point(make_rational(1, 80), 128))));
    EXPECT_TRUE(one[1].value.overlaps(exp(RealInterval::point(make_rational(1, 20), 128))));
    EXPECT_NEAR(other[1].value.mid_double(), std::exp(1.0 / 80), 1e-15);
    EXPECT_NEAR(one[1].value.mid_double(), std::exp(1.0 / 20), 1e-15);
}

TEST(GeneralBounds, CBracketStable) {
    RealInterval r = RealInterval::parse("1.05", 128);
    auto a = general_bounds(2, ParityProfile::Other, 7, r, 128);
    auto b = general_bounds(2, ParityProfile::Other, 7, r.with_precision(256), 256);
    ASSERT_EQ(a.size(), 5u);
    EXPECT_EQ(a[2].name, "c_bound");
    EXPECT_EQ(*a[2].integer_value, *b[2].integer_value);
    // oracle on the inequality c/(log c)^2 <= 3 (ab)^6 (1 + 1/log r)
    long double rhs = 3 * std::pow(14.0L, 6.0L) * (1 + 1 / std::log(1.05L));
    long double c = a[2].integer_value->get_d();
    EXPECT_LE(f_log_sq(c), rhs * (1 + 1e-15L));
    EXPECT_GT(f_log_sq(c + 1), rhs * (1 - 1e-15L));
    EXPECT_EQ(a[3].verdict, BoundVerdict::Violated);  // 1.05^7 < 2 * 7^8
}

TEST(GeneralBounds, ZetaPowerBound) {
    auto ok = zeta_power_bound(RealInterval::parse("2.5", 128), 10);
    EXPECT_EQ(ok.verdict, BoundVerdict::Satisfied);
    EXPECT_TRUE(ok.value.certainly_le(3));
    auto small = zeta_power_bound(RealInterval::parse("1.01", 128), 5);
    EXPECT_EQ(small.verdict, BoundVerdict::Violated);
}

TEST(TenDelta, Examples) {
    auto exact = ten_delta_check(UnityRoot::omega(), RealInterval::point(0, 128));
    EXPECT_EQ(exact.verdict, BoundVerdict::Satisfied);
    EXPECT_TRUE(exact.value.contains(Rational(0)));

    ComplexBox w = ComplexBox::point(make_rational(-1, 2), make_rational(87, 100), 128);
    auto rep = ten_delta_check(w, RealInterval::point(make_rational(1, 100), 128));
    EXPECT_EQ(rep.verdict, BoundVerdict::Satisfied);
    std::complex<long double> wd(-0.5L, 0.87L);
    EXPECT_NEAR(rep.value.mid_double(), static_cast<double>(std::abs(wd * wd + wd + 1.0L)), 1e-15);

    EXPECT_THROW(ten_delta_check(ComplexBox::point(2, 0, 128), RealInterval::point(make_rational(1, 100), 128)),
                 PreconditionUnverifiable);
    EXPECT_THROW(ten_delta_check(w, RealInterval::point(make_rational(1, 5), 128)), PreconditionUnverifiable);
}

TEST(TenDelta, RandomViolators) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3, 3);
    RealInterval delta = RealInterval::point(make_rational(1, 20), 128);
    int thrown = 0;
    for (int i = 0; i < 200; ++i) {
        double re = u(rng), im = u(rng);
        double m = std::hypot(re, im);
        if (std::fabs(std::log(m)) < 0.06) continue;
        ComplexBox w(RealInterval::parse(std::to_string(re), 128), RealInterval::parse(std::to_string(im), 128));
        EXPECT_THROW(ten_delta_check(w, delta), PreconditionUnverifiable);
        ++thrown;
    }
    EXPECT_GT(thrown, 100);
}

TEST(CloseWindow, EightClosesAsStated) {
    auto roots = isolate_segment_roots(8, fine);
    auto ang = window_angle(8, roots[0].t, 256);
    EXPECT_TRUE(ang.theta.certainly_negative());
    EXPECT_NEAR(ang.theta.mid_double(), -0.0005379141, 1e-10);
    const Rational printed = parse_rational("5840.32375784959"), tol = make_rational(1, 100000000);
    EXPECT_TRUE(ang.pi_over_abs_theta.certainly_ge(printed - tol));
    EXPECT_TRUE(ang.pi_over_abs_theta.certainly_le(printed + tol));
    EXPECT_LT(ang.pi_over_abs_theta.width_double(), 1e-8);
    auto m1 = nearest_integer_distance(ang.pi_over_abs_theta);
    EXPECT_EQ(m1.nearest, 5840);
    EXPECT_NEAR(m1.distance.mid_double(), 0.32375784959, 1e-10);

    auto cs = c_small_threshold(abs(roots[0].orbit[0]), 8);
    auto l3 = lmn3_c_max(8);
    auto rep = close_window(8, roots[0], *cs.integer_value, *l3.integer_value);
    EXPECT_EQ(rep.verdict, BoundVerdict::Satisfied) << rep.note;
    EXPECT_GE(*rep.integer_value, 1);
    EXPECT_LE(*rep.integer_value, 1000);
}

TEST(CloseWindow, Degenerate) {
    auto roots = isolate_segment_roots(8, fine);
    auto rep = close_window(8, roots[0], 5000, 5000);
    EXPECT_EQ(rep.verdict, BoundVerdict::Satisfied);
    EXPECT_EQ(*rep.integer_value, 0);
}

TEST(CloseWindow, LooseToleranceIsNotClosed) {
    // c_lo = 9 gives a tolerance above 1, so no m can be ruled out
    auto roots = isolate_segment_roots(8, fine);
    auto rep = close_window(8, roots[0], 9, 5000000);
    EXPECT_EQ(rep.verdict, BoundVerdict::Undecided);
    EXPECT_FALSE(rep.note.empty());
}

// --- properties -----------------------------------------------------------

TEST(Property, RootCertification) {
    const Rational w = make_rational(Integer(1), Integer(1) << 40);
    for (int n = 6; n <= 30; ++n) {
        auto roots = isolate_segment_roots(n, w);
        const ZPoly p = build_pq(n).P;
        for (const auto& r : roots) {
            EXPECT_TRUE(eval_on_segment(p, r.t.with_precision(256)).re().contains_zero()) << n;
            RealInterval th_lo = RealInterval::pi(256) - atan(2 * RealInterval::point(r.t.hi_rational(), 256));
            RealInterval th_hi = RealInterval::pi(256) - atan(2 * RealInterval::point(r.t.lo_rational(), 256));
            int s1 = segment_sign_function(n, th_lo).certain_sign(), s2 = segment_sign_function(n, th_hi).certain_sign();
            EXPECT_NE(s1, 0);
            EXPECT_EQ(s1, -s2) << n;
        }
    }
}

TEST(Property, CountLaw) {
    for (int n = 6; n <= 60; ++n) {
        auto d = build_pq(n);
        EXPECT_EQ(static_cast<int>(isolate_segment_roots(n, make_rational(1, 1000)).size()) * 6, d.Q.degree()) << n;
    }
}

TEST(Property, OrbitClosure) {
    for (int n = 6; n <= 30; ++n) {
        const ZPoly q = q_primitive(build_pq(n));
        for (const auto& r : isolate_segment_roots(n, fine))
            for (const auto& box : r.orbit) EXPECT_TRUE(eval_box(q, box).contains_zero()) << n;
    }
}

TEST(Property, ThresholdMonotonicity) {
    for (int b = 6; b <= 40; b += 2)
        for (int k = 0; k < 6; ++k) {
            Rational r1 = make_rational(14, 9) + make_rational(k, 5), r2 = make_rational(14, 9) + make_rational(k + 1, 5);
            EXPECT_TRUE(c_small_threshold(r1, b).value.certainly_less(c_small_threshold(r2, b).value));
            EXPECT_TRUE(c_small_threshold(r1, b).value.certainly_less(c_small_threshold(r1, b + 1).value));
        }
    Integer prev = 0;
    for (int b = 6; b <= 80; ++b) {
        Integer c = *lmn3_c_max(b).integer_value;
        EXPECT_GT(c, prev) << b;
        prev = c;
    }
}

TEST(Property, VerdictsStableUnderPrecisionDoubling) {
    auto roots = isolate_segment_roots(8, fine);
    for (Precision p : {128, 256}) {
        EXPECT_EQ(bound_14_9_at_modulus(make_rational(14, 9), p).verdict,
                  bound_14_9_at_modulus(make_rational(14, 9), 2 * p).verdict);
        EXPECT_EQ(bound_14_9(roots[0].t.with_precision(p)).verdict, bound_14_9(roots[0].t.with_precision(2 * p)).verdict);
        EXPECT_EQ(*lmn3_c_max(8, std::nullopt, p).integer_value, *lmn3_c_max(8, std::nullopt, 2 * p).integer_value);
        auto g1 = general_bounds(3, ParityProfile::Other, 11, std::nullopt, p);
        auto g2 = general_bounds(3, ParityProfile::Other, 11, std::nullopt, 2 * p);
        for (std::size_t i = 0; i < g1.size(); ++i) EXPECT_EQ(g1[i].verdict, g2[i].verdict) << g1[i].name;
        auto w1 = close_window(8, roots[0], 2920, 4947180, 2 * p);
        auto w2 = close_window(8, roots[0], 2920, 4947180, 4 * p);
        EXPECT_EQ(w1.verdict, w2.verdict);
        EXPECT_EQ(*w1.integer_value, *w2.integer_value);
    }
}
