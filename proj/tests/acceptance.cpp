// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "pscert/pipeline/sweep.hpp"

using namespace pscert;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

using MpzPoly = std::vector<mpz_class>;  // constant term first

MpzPoly mul(const MpzPoly& a, const MpzPoly& b) {
    MpzPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Trivial factor from divisibility alone: x(x+1) for odd n, and
// (x^2+x+1)^e with e = 0, 2, 1 for n = 0, 1, 2 mod 3.
MpzPoly expected_trivial_factor(int n) {
    MpzPoly c{1};
    if (n % 2 == 1) c = mul(c, MpzPoly{0, 1, 1});
    const int e = n % 3 == 0 ? 0 : n % 3 == 1 ? 2 : 1;
    for (int i = 0; i < e; ++i) c = mul(c, MpzPoly{1, 1, 1});
    return c;
}

// Exact division by a monic polynomial; empty result if it does not divide.
MpzPoly divide_monic(MpzPoly p, const MpzPoly& d) {
    const std::size_t dd = d.size() - 1;
    if (p.size() < d.size()) return {};
    MpzPoly q(p.size() - dd, 0);
    for (std::size_t i = p.size(); i-- > dd;) {
        mpz_class coef = p[i];
        q[i - dd] = coef;
        for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= coef * d[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (p[i] != 0) return {};
    return q;
}

std::vector<mpz_class> coeffs_of(const ZPoly& f) { return std::vector<mpz_class>(f.coeffs().begin(), f.coeffs().end()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Exhaustive search over tuples of (b-a)-th roots of unity.
bool brute_force_unity(int which, long a, long b) {
    const long d = b - a;
    std::vector<UnityRoot> roots;
    for (long j = 0; j < d; ++j) roots.emplace_back(d, j);
    std::vector<std::size_t> idx(static_cast<std::size_t>(which), 0);
    for (;;) {
        std::vector<UnityRoot> terms{UnityRoot()};
        for (auto i : idx) terms.push_back(roots[i].pow(a));
        if (sum_is_zero(std::span<const UnityRoot>(terms))) return true;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == roots.size()) idx[k++] = 0;
        if (k == idx.size()) return false;
    }
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// --- criteria ----------------------------------------------------------------------

Outcome trivial_factor_law() {
    Outcome o;
    for (int n = 2; n <= 200 && o.pass; ++n) {
        PQDecomposition d = build_pq(n);
        const std::string at = " at n = " + std::to_string(n);
        o.require(coeffs_of(d.P) == oracle::power_sum_poly(n), "P differs from the binomial expansion" + at);
        o.require(to_rational(d.C) * d.Q == to_rational(d.P), "C*Q != P" + at);
        o.require(d.Q.degree() % 6 == 0, "deg Q not divisible by 6" + at);
        o.require(make_monic(to_rational(d.C)) == to_rational(ZPoly(expected_trivial_factor(n))),
                  "trivial factor does not match the n mod 6 row" + at);
    }
    return o;
}

Outcome pair_sweep() {
    Outcome o;
    for (long b = 2; b <= 60 && o.pass; ++b)
        for (long c = b + 1; c <= 60; ++c) {
            ZSet z = pair_zset(b, c);
            const std::string at = " at (" + std::to_string(b) + ", " + std::to_string(c) + ")";
            o.require(z.nontrivial_empty(), "gcd(Q_b, Q_c) not constant" + at);
            o.require(z.trivial.zero_minus_one == ((b * c) % 2 != 0), "{0,-1} flag" + at);
            o.require(z.trivial.cube_roots == ((b * c) % 3 != 0), "cube-root flag" + at);
        }
    // numeric cross-check on quotients built without the library
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> pick(2, 60);
    int checked = 0;
    while (checked < 20 && o.pass) {
        int b = pick(rng), c = pick(rng);
        if (b >= c) continue;
        MpzPoly qb = divide_monic(oracle::power_sum_poly(b), expected_trivial_factor(b));
        MpzPoly qc = divide_monic(oracle::power_sum_poly(c), expected_trivial_factor(c));
        o.require(!qb.empty() && !qc.empty(), "oracle trivial factor does not divide");
        ++checked;
        if (qb.size() < 2 || qc.size() < 2) continue;
        long double dist = oracle::min_cross_distance(oracle::roots(qb), oracle::roots(qc));
        o.require(oracle::separated(dist), "numeric roots of Q_" + std::to_string(b) + " and Q_" + std::to_string(c) + " meet");
    }
    return o;
}

Outcome b8_end_to_end() {
    Outcome o;
    Certificate c = certify_a1(8);
    o.require(c.conclusion == "closed", "b = 8 not closed");
    RealInterval t = interval_from_json(c.last("max_modulus")->outputs.at("t"));
    o.require(std::fabs(t.mid_double() - 2.513228157188) < 1e-9, "segment root t");
    o.require(Integer(c.last("c_small_threshold")->outputs.at("c_lo").get<std::string>()) >= 2500, "c_lo < 2500");
    Integer c_hi(c.last("lmn3_c_max")->outputs.at("c_hi").get<std::string>());
    o.require(c_hi >= 4500000 && c_hi <= 5500000, "c_hi outside [4.5e6, 5.5e6]");
    const Step* cw = c.last("close_window");
    o.require(cw && cw->verdict == "Satisfied", "window not closed");
    if (!cw) return o;
    RealInterval q = interval_from_json(cw->outputs.at("enclosures").at("pi/|theta|"));
    const Rational figure = parse_rational("5840.32375784959"), half_ulp = parse_rational("0.000000000005");
    o.require(q.lo_rational() - half_ulp <= figure && figure <= q.hi_rational() + half_ulp,
              "pi/|theta| does not round to 5840.32375784959");
    o.require(q.width() < make_rational(1, Integer(100000000)), "pi/|theta| wider than 1e-8");
    o.require(Integer(cw->outputs.at("integer_value").get<std::string>()) <= 1000, "more than 1000 values of m");
    for (int b : {10, 11, 13}) {
        Certificate cb = certify_a1(b);
        o.require(cb.conclusion == "closed", "b = " + std::to_string(b) + " is " + cb.conclusion);
        o.require(!cb.comments.empty(), "no margin recorded for b = " + std::to_string(b));
    }
    return o;
}

Outcome constant_14_9() {
    Outcome o;
    BoundReport r = bound_14_9_at_modulus(make_rational(14, 9));
    o.require(r.value.certainly_greater(parse_rational("0.4885")) && r.value.certainly_less(parse_rational("0.4890")),
              "value outside (0.4885, 0.4890)");
    o.require(r.verdict == BoundVerdict::Satisfied, "not certified below 1/2");
    return o;
}

Outcome irreducibility() {
    Outcome o;
    for (int b = 6; b <= 42; ++b) {
        PQDecomposition d = build_pq(b);
        if (d.Q.degree() == 0) continue;
        o.require(certify_irreducible(q_primitive(d)).verdict == IrreducibilityVerdict::Irreducible,
                  "Q_" + std::to_string(b) + " not certified irreducible");
    }
    ZPoly q9 = q_primitive(build_pq(9)), q15 = q_primitive(build_pq(15));
    o.require(q9.degree() == 6 && abs(q9.lc()) == 3, "primitive Q_9");
    o.require(q15.degree() == 12 && abs(q15.lc()) == 15, "primitive Q_15");
    return o;
}

Outcome max_modulus_thresholds() {
    Outcome o;
    const Rational w = make_rational(1, Integer(1) << 60);
    for (int b = 17; b <= 42; ++b)
        o.require(max_modulus(b, w).certainly_ge(parse_rational("2.72")), "max modulus below 2.72 at b = " + std::to_string(b));
    for (int b : {12, 14, 16})
        o.require(max_modulus(b, w).certainly_ge(parse_rational("3.83")), "max modulus below 3.83 at b = " + std::to_string(b));
    return o;
}

Outcome finite_field() {
    Outcome o;
    o.require(regseq3_mod_p(1, 6, 100, 4594399).verdict == RegSeq::NotRegular, "(1,6,100) mod 4594399");
    o.require(regseq3_rational(1, 6, 100).verdict == RegSeq::Regular, "(1,6,100) over Q");
    o.require(regseq3_mod_p(1, 2, 3, 5).verdict == RegSeq::Regular, "(1,2,3) mod 5");
    return o;
}

Outcome membership_suite() {
    Outcome o;
    auto member = [](const char* t, std::vector<std::string> g, std::size_t n) {
        std::vector<MultiPoly> gens;
        for (const auto& s : g) gens.push_back(parse_multipoly(s, n));
        return graded_membership(parse_multipoly(t, n), gens).member;
    };
    o.require(member("p5", {"p1", "p2"}, 4), "p5 in (p1, p2)");
    o.require(member("p5", {"p1", "p3"}, 4), "p5 in (p1, p3)");
    o.require(member("p2^2", {"p1", "p4"}, 3), "p2^2 in (p1, p4)");
    o.require(zerodivisor_identity_check().member, "degree-8 identity in (p2, p8)");
    o.require(!member("p5", {"p2", "p3"}, 3), "p5 not in (p2, p3)");
    return o;
}

Outcome criteria_brute_force() {
    Outcome o;
    for (int which = 1; which <= 3; ++which)
        for (long a = 1; a <= 12; ++a)
            for (long b = a + 1; b <= 12; ++b) {
                CriterionResult r = roots_of_unity_case(which, a, b);
                const std::string at = " at case " + std::to_string(which) + ", (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                o.require(r.holds == brute_force_unity(which, a, b), "predicate differs from enumeration" + at);
                if (r.holds)
                    o.require(r.witness && verify_roots_of_unity_witness(which, a, b, std::get<std::vector<UnityRoot>>(*r.witness)),
                              "witness fails" + at);
            }
    for (long b = 2; b <= 200; ++b) o.require(normal4(1, b).holds == (b % 2 == 0), "normal4(1, " + std::to_string(b) + ")");
    return o;
}

Outcome general_bounds_check() {
    Outcome o;
    auto other = general_bounds(2, ParityProfile::Other), one = general_bounds(2, ParityProfile::ExactlyOneEven);
    o.require(*other[0].integer_value == 9600 && *one[0].integer_value == 2400, "b-bounds 9600 / 2400");
    o.require(std::fabs(other[1].value.mid_double() - std::exp(1.0L / 80)) < 1e-15L &&
                  std::fabs(one[1].value.mid_double() - std::exp(1.0L / 20)) < 1e-15L &&
                  other[1].value.width_double() < 1e-30 && one[1].value.width_double() < 1e-30,
              "r lower bounds exp(1/80) / exp(1/20)");
    const RealInterval r = RealInterval::point(parse_rational("1.05"), 128);
    auto lo = general_bounds(2, ParityProfile::Other, 7, r, 128), hi = general_bounds(2, ParityProfile::Other, 7, r, 256);
    o.require(lo[2].name == "c_bound" && lo[2].integer_value && hi[2].integer_value, "c bracket missing");
    o.require(*lo[2].integer_value == *hi[2].integer_value, "c bracket changes under precision doubling");
    return o;
}

Outcome property_gates() {
    Outcome o;
    // parallel determinism
    const fs::path base = fs::temp_directory_path() / ("pscert_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(base);
    auto spec = [&](const char* sub) {
        Json j = Json::parse(R"({"mode": "pair-a1", "ranges": {"b": [2, 40], "c": [3, 40]}})");
        j["output"] = (base / sub).string();
        return parse_sweep_spec(j);
    };
    run_sweep(spec("one"), 1);
    run_sweep(spec("eight"), 8);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(base / "one")) {
        ++files;
        o.require(slurp(e.path()) == slurp(base / "eight" / e.path().filename()), "sweep output differs: " + e.path().filename().string());
    }
    o.require(files > 1, "sweep wrote no files");
    fs::remove_all(base);

    // verdict stability of analytic reports under precision doubling
    const Rational w = make_rational(1, Integer(1) << 140);
    auto root8 = isolate_segment_roots(8, w).back();
    RealInterval r8 = max_modulus(8, w);
    std::vector<std::function<BoundReport(Precision)>> reports{
        [](Precision p) { return bound_14_9_at_modulus(make_rational(14, 9), p); },
        [&](Precision p) { return c_small_threshold(r8.with_precision(p), 8); },
        [](Precision p) { return lmn3_c_max(8, Integer(2920), p); },
        [&](Precision p) { return close_window(8, root8, Integer(2920), Integer(4947180), p); },
        [](Precision p) { return zeta_power_bound(RealInterval::point(parse_rational("1.05"), p), Integer(40)); },
        [](Precision p) { return ten_delta_check(UnityRoot::omega(), RealInterval::point(make_rational(1, 20), p)); },
    };
    for (auto profile : {ParityProfile::ExactlyOneEven, ParityProfile::Other})
        for (Precision p : {256u, 512u}) {
            auto x = general_bounds(3, profile, 11, std::nullopt, p), y = general_bounds(3, profile, 11, std::nullopt, 2 * p);
            for (std::size_t i = 0; i < x.size(); ++i)
                o.require(x[i].verdict == y[i].verdict, x[i].name + " verdict changes under precision doubling");
        }
    for (std::size_t i = 0; i < reports.size(); ++i)
        for (Precision p : {256u, 512u})
            o.require(reports[i](p).verdict == reports[i](2 * p).verdict,
                      "verdict of report " + std::to_string(i) + " changes between " + std::to_string(p) + " and " +
                          std::to_string(2 * p) + " bits");

    // replay
    std::vector<Certificate> certs;
    for (int b = 2; b <= 20; ++b) certs.push_back(certify_a1(b));
    certs.push_back(certify_pair(8, 30));
    certs.push_back(certify_triple(2, 3, 7));
    certs.push_back(certify_regseq({1, 6, 100}, 4594399));
    certs.push_back(certify_criteria({1, 2, 3, 4}));
    certs.push_back(certify_membership("p5", {"p1", "p3"}, 4));
    certs.push_back(certify_general_bounds(2, 7));
    for (const auto& c : certs) {
        ReplayReport rep = replay(certificate_from_json(Json::parse(to_json(c).dump())));
        o.require(rep.ok, "replay of " + c.kind + " " + c.inputs.dump() + ": " + (rep.mismatches.empty() ? "" : rep.mismatches[0]));
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "trivial-factor law, 2 <= n <= 200", 10, trivial_factor_law},
        {2, "pair sweep 1 < b < c <= 60 with numeric cross-check", 300, pair_sweep},
        {3, "b = 8 end-to-end certificate; b = 10, 11, 13 conclusive", 60, b8_end_to_end},
        {4, "14/9 constant below 1/2", 10, constant_14_9},
        {5, "irreducibility of Q_b, 6 <= b <= 42; primitive Q_9, Q_15", 120, irreducibility},
        {6, "max-modulus thresholds", 120, max_modulus_thresholds},
        {7, "finite-field and rational regular-sequence checks", 120, finite_field},
        {8, "membership suite", 60, membership_suite},
        {9, "roots-of-unity criteria against enumeration; normal4", 60, criteria_brute_force},
        {10, "general-case bound functions", 60, general_bounds_check},
        {11, "parallel determinism, precision stability, replay", 300, property_gates},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double dt = seconds_since(t0);
        if (o.pass && dt > c.limit) {
            o.pass = false;
            o.detail = "over the time limit of " + std::to_string(static_cast<int>(c.limit)) + " s";
        }
        all = all && o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << dt << " s)";
        if (!o.pass) line << "  -- " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
