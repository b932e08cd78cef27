#pragma once

// Every operation a certificate may record, keyed by name. A step is a pure
// function of its recorded inputs, which is what makes replay possible.

#include <functional>
#include <map>
#include <sstream>

#include "pscert/criteria/criteria.hpp"
#include "pscert/membership/membership.hpp"
#include "pscert/pipeline/certificate.hpp"
#include "pscert/powersum/regseq.hpp"
#include "pscert/unipoly/irreducible.hpp"

namespace pscert {

struct StepResult {
    Json outputs = Json::object();
    std::string verdict;
};

namespace detail {

inline Rational pow2_inverse(int k) { return make_rational(Integer(1), Integer(1) << k); }

inline std::string verdict_of(bool holds, const char* yes, const char* no) { return holds ? yes : no; }

inline Json zset_json(const ZSet& z) {
    return Json{{"defining", to_string(z.defining)},
                {"nontrivial_degree", z.defining.degree()},
                {"zero_minus_one", z.trivial.zero_minus_one},
                {"cube_roots", z.trivial.cube_roots}};
}

inline Json criterion_json(const CriterionResult& r) {
    Json j{{"name", r.name}, {"holds", r.holds}, {"label", r.label}};
    Json details = Json::array();
    for (const auto& d : r.details) details.push_back(Json{{"name", d.name}, {"holds", d.holds}, {"explanation", d.explanation}});
    j["details"] = details;
    if (r.witness) {
        Json w = Json::array();
        std::visit(
            [&](const auto& v) {
                for (const auto& x : v) {
                    std::ostringstream os;
                    os << x;
                    w.push_back(os.str());
                }
            },
            *r.witness);
        j["witness"] = w;
    }
    return j;
}

inline Json regseq_json(const RegSeqVerdict& v) {
    Json j{{"exponents", v.exponents}, {"reduced", v.reduced}, {"field", v.field}, {"verdict", to_string(v.verdict)}};
    if (v.trivial_witness) j["trivial_witness"] = *v.trivial_witness;
    if (v.factor_witness) j["factor_witness"] = *v.factor_witness;
    j["note"] = v.note;
    return j;
}

inline StepResult step_build_pq(const Json& in) {
    const int n = in.at("n").get<int>();
    PQDecomposition d = build_pq(n);
    ZPoly q = q_primitive(d);
    StepResult r;
    r.outputs = Json{{"P", to_string(d.P)},
                     {"C", to_string(d.C)},
                     {"Q", to_string(d.Q)},
                     {"trivial_factor", trivial_factor_label(n)},
                     {"deg_Q", d.Q.degree()},
                     {"Q_primitive", to_string(q)},
                     {"leading_coefficient", q.lc().get_str()}};
    r.verdict = "exact";
    return r;
}

inline StepResult step_certify_irreducible(const Json& in) {
    const int n = in.at("n").get<int>();
    auto cert = certify_irreducible(q_primitive(build_pq(n)), in.at("budget").get<int>());
    StepResult r;
    r.outputs = Json{{"primes", cert.primes}, {"degree_patterns", cert.degree_patterns}};
    r.verdict = to_string(cert.verdict);
    return r;
}

// A primitive irreducible factor with leading coefficient outside {1, 2}
// cannot divide 1 + x^c + (-1-x)^c for even c (leading coefficient 2).
inline StepResult step_lc_obstruction(const Json& in) {
    const int n = in.at("n").get<int>();
    const bool irreducible = in.at("irreducible").get<bool>();
    Integer lc = abs(q_primitive(build_pq(n)).lc());
    const bool applies = irreducible && lc != 1 && lc != 2 && build_pq(n).Q.degree() > 0;
    StepResult r;
    r.outputs = Json{{"leading_coefficient", lc.get_str()}, {"closes", applies ? "even c" : "none"}};
    r.verdict = detail::verdict_of(applies, "Satisfied", "Violated");
    return r;
}

inline StepResult step_max_modulus(const Json& in) {
    const int n = in.at("n").get<int>();
    const Rational width = pow2_inverse(in.at("width_log2").get<int>());
    const Precision bits = in.at("bits").get<Precision>(), cap = in.at("cap").get<Precision>();
    StepResult r;
    try {
        auto roots = isolate_segment_roots(n, width, bits, cap);
        RealInterval m = max_modulus(n, width, bits, cap);
        r.outputs = Json{{"segment_roots", roots.size()}, {"t", to_json(roots.back().t)}, {"r", to_json(m)}};
        r.verdict = "Satisfied";
    } catch (const PrecisionExhausted& e) {
        r.outputs = Json{{"error", e.what()}};
        r.verdict = "Undecided";
    }
    return r;
}

inline StepResult step_bound_14_9(const Json& in) {
    BoundReport rep = bound_14_9_at_modulus(parse_rational(in.at("r_exact").get<std::string>()), in.at("bits").get<Precision>());
    return {to_json(rep), to_string(rep.verdict)};
}

inline StepResult step_c_small(const Json& in) {
    const int b = in.at("b").get<int>();
    const Precision bits = in.value("bits", Precision(128));
    BoundReport rep = in.contains("r_exact")
                          ? c_small_threshold(parse_rational(in.at("r_exact").get<std::string>()), b, bits)
                          : c_small_threshold(interval_from_json(in.at("r")), b);
    StepResult r{to_json(rep), to_string(rep.verdict)};
    r.outputs["c_lo"] = rep.integer_value->get_str();
    return r;
}

inline StepResult step_lmn3(const Json& in) {
    BoundReport rep = lmn3_c_max(in.at("b").get<int>(), Integer(in.at("c_lo").get<std::string>()), in.at("bits").get<Precision>());
    StepResult r{to_json(rep), to_string(rep.verdict)};
    r.outputs["c_hi"] = rep.integer_value->get_str();
    return r;
}

inline StepResult step_close_window(const Json& in) {
    SegmentRoot z;
    z.n = in.at("b").get<int>();
    z.t = interval_from_json(in.at("t"));
    BoundReport rep = close_window(z.n, z, Integer(in.at("c_lo").get<std::string>()), Integer(in.at("c_hi").get<std::string>()),
                                   in.at("bits").get<Precision>());
    return {to_json(rep), to_string(rep.verdict)};
}

inline StepResult step_trivial_flags(const Json& in) {
    TrivialFlags f = trivial_flags(in.at("exponents").get<std::vector<long>>());
    return {Json{{"zero_minus_one", f.zero_minus_one}, {"cube_roots", f.cube_roots}}, "exact"};
}

inline StepResult step_pair_zset(const Json& in) {
    ZSet z = pair_zset(in.at("b").get<long>(), in.at("c").get<long>());
    return {zset_json(z), detail::verdict_of(z.nontrivial_empty(), "empty", "nonempty")};
}

inline StepResult step_triple_zset(const Json& in) {
    TripleResult t = triple_zset(in.at("a").get<long>(), in.at("b").get<long>(), in.at("c").get<long>());
    if (auto* z = std::get_if<ZSet>(&t)) return {zset_json(*z), detail::verdict_of(z->nontrivial_empty(), "empty", "nonempty")};
    const auto& c = std::get<CandidateReport>(t);
    Json factors = Json::array();
    for (const auto& f : c.surviving_factors) factors.push_back(to_string(f));
    TrivialFlags f = trivial_flags(c.exponents);
    return {Json{{"surviving_factors", factors},
                 {"reason", c.reason},
                 {"zero_minus_one", f.zero_minus_one},
                 {"cube_roots", f.cube_roots}},
            "candidate"};
}

inline StepResult step_regseq(const Json& in) {
    auto e = in.at("exponents").get<std::vector<long>>();
    const auto p = in.value("characteristic", std::uint64_t(0));
    RegSeqVerdict v;
    if (e.size() == 2)
        v = regseq2(e[0], e[1], p);
    else if (e.size() == 3)
        v = p ? regseq3_mod_p(e[0], e[1], e[2], p) : regseq3_rational(e[0], e[1], e[2]);
    else
        throw DomainError("regular-sequence checks take two or three exponents");
    return {regseq_json(v), to_string(v.verdict)};
}

inline StepResult criterion_step(const CriterionResult& c) { return {criterion_json(c), verdict_of(c.holds, "holds", "fails")}; }

inline StepResult step_factorial(const Json& in) {
    return criterion_step(factorial_divisibility(ExponentSet(in.at("set").get<std::vector<long>>())));
}
inline StepResult step_conjecture4(const Json& in) {
    return criterion_step(conjecture4_conditions(ExponentSet(in.at("set").get<std::vector<long>>())));
}
inline StepResult step_normal4(const Json& in) { return criterion_step(normal4(in.at("a").get<long>(), in.at("b").get<long>())); }
inline StepResult step_roots_of_unity(const Json& in) {
    return criterion_step(roots_of_unity_case(in.at("which").get<int>(), in.at("a").get<long>(), in.at("b").get<long>()));
}

inline StepResult step_membership(const Json& in) {
    const auto n = in.at("nvars").get<std::size_t>();
    MultiPoly target = parse_multipoly(in.at("target").get<std::string>(), n);
    std::vector<MultiPoly> gens;
    for (const auto& g : in.at("generators")) gens.push_back(parse_multipoly(g.get<std::string>(), n));
    MembershipAnswer a = graded_membership(target, gens);
    Json cof = Json::array();
    for (const auto& c : a.cofactors) cof.push_back(to_string(c));
    return {Json{{"member", a.member},
                 {"cofactors", cof},
                 {"degree_bound", a.degree_bound},
                 {"rows", a.rows},
                 {"columns", a.columns},
                 {"rank", a.rank}},
            verdict_of(a.member, "member", "not-member")};
}

inline StepResult step_general_bounds(const Json& in) {
    const auto profile = in.at("profile").get<std::string>() == "exactly-one-even" ? ParityProfile::ExactlyOneEven
                                                                                   : ParityProfile::Other;
    std::optional<int> b;
    if (in.contains("b")) b = in.at("b").get<int>();
    std::optional<RealInterval> r;
    if (in.contains("r")) r = interval_from_json(in.at("r"));
    auto reps = general_bounds(in.at("a").get<int>(), profile, b, r, in.at("bits").get<Precision>());
    StepResult out;
    Json list = Json::array();
    bool undecided = false;
    for (const auto& rep : reps) {
        list.push_back(to_json(rep));
        undecided = undecided || rep.verdict == BoundVerdict::Undecided;
    }
    out.outputs = Json{{"reports", list}};
    out.verdict = undecided ? "Undecided" : "Satisfied";
    return out;
}

inline const std::map<std::string, std::function<StepResult(const Json&)>>& step_table() {
    static const std::map<std::string, std::function<StepResult(const Json&)>> table{
        {"build_pq", step_build_pq},
        {"certify_irreducible", step_certify_irreducible},
        {"leading_coefficient_obstruction", step_lc_obstruction},
        {"max_modulus", step_max_modulus},
        {"bound_14_9", step_bound_14_9},
        {"c_small_threshold", step_c_small},
        {"lmn3_c_max", step_lmn3},
        {"close_window", step_close_window},
        {"trivial_flags", step_trivial_flags},
        {"pair_zset", step_pair_zset},
        {"triple_zset", step_triple_zset},
        {"regseq", step_regseq},
        {"factorial_divisibility", step_factorial},
        {"conjecture4_conditions", step_conjecture4},
        {"normal4", step_normal4},
        {"roots_of_unity_case", step_roots_of_unity},
        {"graded_membership", step_membership},
        {"general_bounds", step_general_bounds},
    };
    return table;
}

}  // namespace detail

/// Execute one named operation on its inputs.
inline Step run_step(const std::string& op, const Json& inputs) {
    const auto& table = detail::step_table();
    auto it = table.find(op);
    if (it == table.end()) throw DomainError("unknown step operation '" + op + "'");
    StepResult r = it->second(inputs);
    return Step{op, inputs, std::move(r.outputs), std::move(r.verdict)};
}

}  // namespace pscert
