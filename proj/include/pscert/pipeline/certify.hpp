#pragma once

// Certificate builders for each kind, the rule table that turns step
// verdicts into a conclusion, and replay.

#include <optional>
#include <string>
#include <vector>

#include "pscert/pipeline/steps.hpp"

namespace pscert {

struct PipelineOptions {
    Precision start = 128;
    Precision cap = precision_policy::max_bits();
    int irreducibility_budget = irreducibility_default_budget;
    int width_log2 = 140;  // segment roots are isolated to width 2^-140
};

namespace detail {

inline const Step& record(Certificate& c, const std::string& op, Json inputs) {
    c.steps.push_back(run_step(op, std::move(inputs)));
    return c.steps.back();
}

// Run a precision-dependent step at start, 2 start, ... up to cap until it
// is no longer Undecided; every attempt is kept.
template <class MakeInputs>
const Step& escalate(Certificate& c, const std::string& op, const PipelineOptions& opt, MakeInputs make,
                     Precision floor = 0) {
    const Step* s = nullptr;
    for (Precision p = std::max(opt.start, floor); p <= opt.cap; p *= 2) {
        s = &record(c, op, make(p));
        c.precision_trace.push_back({op, p, s->verdict});
        if (s->verdict != "Undecided") break;
    }
    if (!s) throw DomainError("precision cap below the starting precision");
    return *s;
}

inline std::string sci(mpfr_srcptr x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.4Rg", x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

inline bool flag(const Step* s, const char* key) { return s && s->outputs.value(key, false); }

inline std::string conclude_a1(const Certificate& c) {
    const Step* pq = c.last("build_pq");
    if (!pq) return "undecided";
    if (pq->outputs.at("deg_Q").get<int>() == 0) return "vacuous";
    const int b = c.inputs.at("b").get<int>();
    const Step* lco = c.last("leading_coefficient_obstruction");
    if (b % 2 == 1 && lco && lco->verdict == "Satisfied") return "closed";

    const Step* mod = c.last("max_modulus");
    if (!mod) mod = c.last("bound_14_9");
    const Step* cs = c.last("c_small_threshold");
    const Step* lm = c.last("lmn3_c_max");
    if (!mod || mod->verdict != "Satisfied" || !cs || cs->verdict != "Satisfied" || !lm) return "undecided";
    if (lm->verdict == "Violated") return "closed";
    const Step* cw = c.last("close_window");
    if (cw && cw->verdict == "Satisfied" && mod->op == "max_modulus") return "closed";
    return "undecided";
}

inline std::string conclude_zset(const Certificate& c) {
    const Step* z = c.last(c.kind == "pair" ? "pair_zset" : "triple_zset");
    if (!z) {
        const Step* t = c.last("trivial_flags");
        if (!t) return "undecided";
        return flag(t, "zero_minus_one") || flag(t, "cube_roots") ? "nonempty-trivial" : "empty";
    }
    if (z->verdict == "candidate") return "candidate";
    if (z->verdict == "nonempty") return "nonempty";
    return flag(z, "zero_minus_one") || flag(z, "cube_roots") ? "nonempty-trivial" : "empty";
}

}  // namespace detail

/// The conclusion the rule table assigns to the recorded step verdicts.
inline std::string derive_conclusion(const Certificate& c) {
    if (!c.error.empty()) return "undecided";
    if (c.kind == "a1-pipeline") return detail::conclude_a1(c);
    if (c.kind == "pair" || c.kind == "triple") return detail::conclude_zset(c);
    if (c.steps.empty()) return "undecided";
    if (c.kind == "mod-p") {
        const std::string& v = c.steps.back().verdict;
        return v == "Unknown" ? "undecided" : v;
    }
    if (c.kind == "criteria") {
        for (const auto& s : c.steps)
            if (s.verdict != "holds") return "fails";
        return "holds";
    }
    if (c.kind == "membership") return c.steps.back().verdict;
    if (c.kind == "general-bounds") {
        for (const auto& s : c.steps)
            if (s.verdict == "Undecided") return "undecided";
        return "computed";
    }
    throw DomainError("unknown certificate kind '" + c.kind + "'");
}

inline bool conclusive(const std::string& conclusion) { return conclusion != "undecided" && conclusion != "candidate"; }

/// Z(b, c) for all c > b when a = 1.
inline Certificate certify_a1(int b, const PipelineOptions& opt = {}) {
    if (b < 2) throw DomainError("certify_a1 needs b >= 2");
    Certificate c;
    c.kind = "a1-pipeline";
    c.inputs = Json{{"a", 1}, {"b", b}};
    auto finish = [&]() -> Certificate {
        c.conclusion = derive_conclusion(c);
        return c;
    };

    const Step& pq = detail::record(c, "build_pq", Json{{"n", b}});
    if (pq.outputs.at("deg_Q").get<int>() == 0) {
        c.comments.push_back("Q_" + std::to_string(b) + " is constant: every common zero is trivial");
        return finish();
    }
    if (b % 2 == 1) c.caveats.push_back("odd b: the computational claim covers even c; both-odd c is cited to Beukers, not computed");

    const bool irreducible =
        detail::record(c, "certify_irreducible", Json{{"n", b}, {"budget", opt.irreducibility_budget}}).verdict == "Irreducible";
    const Step& lco = detail::record(c, "leading_coefficient_obstruction", Json{{"n", b}, {"irreducible", irreducible}});
    if (lco.verdict == "Satisfied") {
        c.comments.push_back("leading coefficient " + lco.outputs.at("leading_coefficient").get<std::string>() +
                             " of the primitive Q_" + std::to_string(b) + " excludes every even c");
        if (b % 2 == 1) return finish();
    }

    Json r_in, t;
    bool exact_r = false;
    if (irreducible) {
        const Step& mm = detail::escalate(c, "max_modulus", opt, [&](Precision p) {
            return Json{{"n", b}, {"width_log2", opt.width_log2}, {"bits", p}, {"cap", opt.cap}};
        });
        if (mm.verdict != "Satisfied") return finish();
        r_in = mm.outputs.at("r");
        t = mm.outputs.at("t");
    } else {
        c.caveats.push_back("Q_" + std::to_string(b) + " not certified irreducible: using the lower bound 14/9 for r");
        const Step& f = detail::record(c, "bound_14_9", Json{{"r_exact", "14/9"}, {"bits", opt.start}});
        if (f.verdict != "Satisfied") return finish();
        exact_r = true;
    }

    Json cs_in{{"b", b}};
    if (exact_r) {
        cs_in["r_exact"] = "14/9";
        cs_in["bits"] = opt.start;
    } else {
        cs_in["r"] = r_in;
    }
    const std::string c_lo = detail::record(c, "c_small_threshold", cs_in).outputs.at("c_lo").get<std::string>();
    const Step& lm = detail::record(c, "lmn3_c_max", Json{{"b", b}, {"c_lo", c_lo}, {"bits", opt.start}});
    const std::string c_hi = lm.outputs.at("c_hi").get<std::string>();
    c.comments.push_back("certified bracket: c <= " + c_lo + " by the modulus bound, c > " + c_hi + " by the LMN bound; " +
                         lm.outputs.at("note").get<std::string>());
    if (b == 8) c.comments.push_back("published rounded figures for b = 8: c_lo >= 2500, c_hi about 5x10^6");
    if (lm.verdict == "Violated" || exact_r) return finish();

    const Step& cw = detail::escalate(c, "close_window", opt, [&](Precision p) {
        return Json{{"b", b}, {"t", t}, {"c_lo", c_lo}, {"c_hi", c_hi}, {"bits", p}};
    }, std::min<Precision>(256, opt.cap));
    const auto& enc = cw.outputs.at("enclosures");
    if (cw.verdict == "Satisfied" && enc.contains("tolerance"))
        c.comments.push_back("window margin: closest distance " +
                             detail::sci(interval_from_json(cw.outputs.at("value")).lo()) + " against tolerance " +
                             detail::sci(interval_from_json(enc.at("tolerance")).hi()) + "; " +
                             cw.outputs.at("note").get<std::string>());
    return finish();
}

/// Z(b, c) for a single pair with a = 1.
inline Certificate certify_pair(long b, long c) {
    if (b < 2 || c <= b) throw DomainError("pair needs 2 <= b < c");
    Certificate cert;
    cert.kind = "pair";
    cert.inputs = Json{{"a", 1}, {"b", b}, {"c", c}};
    if (b % 2 == 1 && c % 2 == 1) {
        detail::record(cert, "trivial_flags", Json{{"exponents", std::vector<long>{1, b, c}}});
        cert.caveats.push_back("external: Beukers (both exponents odd; nontrivial zeros not computed)");
    } else {
        detail::record(cert, "pair_zset", Json{{"b", b}, {"c", c}});
    }
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

inline Certificate certify_triple(long a, long b, long c) {
    Certificate cert;
    cert.kind = "triple";
    cert.inputs = Json{{"a", a}, {"b", b}, {"c", c}};
    detail::record(cert, "triple_zset", cert.inputs);
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

/// Regularity of p_a, p_b, p_c over F_p, or over Q when p = 0.
inline Certificate certify_regseq(std::vector<long> exps, std::uint64_t p) {
    Certificate cert;
    cert.kind = "mod-p";
    cert.inputs = Json{{"exponents", exps}, {"characteristic", p}};
    detail::record(cert, "regseq", cert.inputs);
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

inline Certificate certify_criteria(const std::vector<long>& set) {
    Certificate cert;
    cert.kind = "criteria";
    cert.inputs = Json{{"set", set}};
    ExponentSet A(set);
    detail::record(cert, "factorial_divisibility", Json{{"set", A.entries()}});
    if (A.size() == 4) {
        if (A.gcd() == 1) {
            detail::record(cert, "conjecture4_conditions", Json{{"set", A.entries()}});
            cert.caveats.push_back("the four-variable conditions are a conjectural criterion");
        } else {
            cert.caveats.push_back("gcd of the set is not 1: four-variable conditions not evaluated");
        }
    }
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

inline Certificate certify_normal4(long a, long b) {
    Certificate cert;
    cert.kind = "criteria";
    cert.inputs = Json{{"a", a}, {"b", b}};
    detail::record(cert, "normal4", cert.inputs);
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

inline Certificate certify_membership(const std::string& target, const std::vector<std::string>& gens, std::size_t nvars) {
    Certificate cert;
    cert.kind = "membership";
    cert.inputs = Json{{"target", target}, {"generators", gens}, {"nvars", nvars}};
    detail::record(cert, "graded_membership", cert.inputs);
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

/// Both parity profiles for a, and the c-side bounds when b is given.
inline Certificate certify_general_bounds(int a, std::optional<int> b, const PipelineOptions& opt = {}) {
    Certificate cert;
    cert.kind = "general-bounds";
    cert.inputs = Json{{"a", a}};
    if (b) cert.inputs["b"] = *b;
    for (const char* profile : {"exactly-one-even", "other"}) {
        Json in{{"a", a}, {"profile", profile}, {"bits", opt.start}};
        if (b) in["b"] = *b;
        detail::escalate(cert, "general_bounds", opt, [&](Precision p) {
            in["bits"] = p;
            return in;
        });
    }
    cert.caveats.push_back("the LMN lower bound is taken as an axiom");
    cert.conclusion = derive_conclusion(cert);
    return cert;
}

struct ReplayReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// Re-run every step from its recorded inputs and compare.
inline ReplayReport replay(const Certificate& c) {
    ReplayReport rep;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Step& s = c.steps[i];
        Step again = run_step(s.op, s.inputs);
        if (again.verdict != s.verdict)
            rep.mismatches.push_back("step " + std::to_string(i) + " (" + s.op + "): verdict " + again.verdict + " != " + s.verdict);
        else if (again.outputs != s.outputs)
            rep.mismatches.push_back("step " + std::to_string(i) + " (" + s.op + "): outputs differ");
    }
    const std::string concl = derive_conclusion(c);
    if (concl != c.conclusion) rep.mismatches.push_back("conclusion " + concl + " != " + c.conclusion);
    rep.ok = rep.mismatches.empty();
    return rep;
}

}  // namespace pscert
