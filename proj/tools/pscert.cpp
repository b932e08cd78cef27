#include <cstring>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pscert/pipeline/sweep.hpp"

using namespace pscert;

namespace {

struct Globals {
    Precision precision = 128;
    Precision max_precision = 0;  // 0: PSCERT_MAX_PRECISION or the built-in cap
    unsigned threads = 0;
    bool json = false;

    PipelineOptions options() const {
        PipelineOptions o;
        o.start = precision;
        o.cap = max_precision ? max_precision : precision_policy::max_bits();
        if (o.start < 64) throw CLI::ValidationError("--precision", "must be at least 64 bits");
        if (o.cap < o.start) throw CLI::ValidationError("--max-precision", "below --precision");
        return o;
    }
};

constexpr int exit_conclusive = 0, exit_error = 1, exit_undecided = 2;

int report_error(bool json, const std::string& type, const std::string& message) {
    if (json)
        std::cout << Json{{"error", Json{{"type", type}, {"message", message}}}}.dump(2) << '\n';
    else
        std::cerr << "pscert: " << type << " error: " << message << '\n';
    return exit_error;
}

std::string scalar_text(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    return s.size() > 96 ? s.substr(0, 93) + "..." : s;
}

void print_certificate(const Certificate& c) {
    std::cout << "kind: " << c.kind << "  inputs: " << c.inputs.dump() << '\n';
    for (const auto& s : c.steps) {
        std::cout << "  " << s.op << " [" << s.verdict << "]";
        if (s.inputs.contains("profile")) std::cout << "  profile=" << s.inputs["profile"].get<std::string>();
        for (const auto& [k, v] : s.outputs.items()) {
            if (v.is_object() || v.is_array() || k == "name" || k == "verdict") continue;
            if (k == "note" && v.get<std::string>().empty()) continue;
            if (k == "label" && v.get<std::string>().empty()) continue;
            std::cout << "  " << k << "=" << scalar_text(v);
        }
        std::cout << '\n';
        for (const auto& r : s.outputs.value("reports", Json::array())) {
            std::cout << "    " << r.value("name", "") << " [" << r.value("verdict", "") << "]";
            if (r.contains("integer_value"))
                std::cout << "  integer_value=" << scalar_text(r["integer_value"]);
            else if (r.contains("value"))
                std::cout << "  value~" << interval_from_json(r["value"]).mid_double();
            if (!r.value("note", "").empty()) std::cout << "  note=" << r["note"].get<std::string>();
            std::cout << '\n';
        }
    }
    for (const auto& s : c.caveats) std::cout << "caveat: " << s << '\n';
    for (const auto& s : c.comments) std::cout << "comment: " << s << '\n';
    if (!c.error.empty()) std::cout << "error: " << c.error << '\n';
    std::cout << "conclusion: " << c.conclusion << '\n';
}

int finish(const Globals& g, const Certificate& c) {
    if (g.json)
        std::cout << to_json(c).dump(2) << '\n';
    else
        print_certificate(c);
    return conclusive(c.conclusion) ? exit_conclusive : exit_undecided;
}

std::string decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*f", digits, rnd, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Json decimal_json(const RealInterval& x, int digits) {
    return Json{{"lo", decimal(x.lo(), digits, MPFR_RNDD)}, {"hi", decimal(x.hi(), digits, MPFR_RNDU)}};
}

std::string decimal_text(const RealInterval& x, int digits) {
    return "[" + decimal(x.lo(), digits, MPFR_RNDD) + ", " + decimal(x.hi(), digits, MPFR_RNDU) + "]";
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (seps.find(ch) != std::string::npos) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int cmd_pq(const Globals& g, int n) {
    if (n < 1) throw DomainError("pq needs n >= 1");
    PQDecomposition d = build_pq(n);
    if (g.json) {
        std::cout << Json{{"n", n},
                          {"P", to_string(d.P)},
                          {"C", to_string(d.C)},
                          {"Q", to_string(d.Q)},
                          {"trivial_factor", trivial_factor_label(n)},
                          {"deg_Q", d.Q.degree()},
                          {"Q_primitive", to_string(q_primitive(d))}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "P=" << to_string(d.P) << "\nC=" << to_string(d.C) << "\nQ=" << to_string(d.Q) << '\n';
    }
    return exit_conclusive;
}

int cmd_roots(const Globals& g, int n, int digits) {
    if (digits < 1 || digits > 2000) throw DomainError("--digits must lie in [1, 2000]");
    const PipelineOptions o = g.options();
    Integer den = 1;
    for (int i = 0; i < digits; ++i) den *= 10;
    const Rational width = make_rational(1, den);
    auto roots = isolate_segment_roots(n, width, o.start, o.cap);
    std::optional<RealInterval> top;
    if (!roots.empty()) top = max_modulus(n, width, o.start, o.cap);
    if (g.json) {
        Json list = Json::array();
        for (const auto& r : roots) {
            Json orbit = Json::array();
            for (const auto& z : r.orbit) orbit.push_back(Json{{"re", decimal_json(z.re(), digits)}, {"im", decimal_json(z.im(), digits)}});
            list.push_back(Json{{"t", decimal_json(r.t, digits)}, {"t_exact", to_json(r.t)}, {"theta", decimal_json(r.theta, digits)},
                                {"modulus", decimal_json(abs(r.orbit[0]), digits)}, {"orbit", orbit}});
        }
        Json out{{"n", n}, {"segment_roots", list}};
        if (top) out["max_modulus"] = decimal_json(*top, digits);
        std::cout << out.dump(2) << '\n';
        return exit_conclusive;
    }
    if (roots.empty()) {
        std::cout << "Q_" << n << " is constant: no roots\n";
        return exit_conclusive;
    }
    for (const auto& r : roots) {
        std::cout << "t in " << decimal_text(r.t, digits) << '\n';
        std::cout << "  |alpha| in " << decimal_text(abs(r.orbit[0]), digits) << "  theta in " << decimal_text(r.theta, digits) << '\n';
    }
    std::cout << "max modulus in " << decimal_text(*top, digits) << '\n';
    return exit_conclusive;
}

int cmd_sweep(const Globals& g, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot read " + file);
    Json spec_json;
    try {
        spec_json = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("sweep spec is not valid JSON: ") + e.what());
    }
    SweepSpec spec = parse_sweep_spec(spec_json);
    SweepResult r = run_sweep(spec, g.threads);
    if (g.json) {
        std::cout << r.summary.dump(2) << '\n';
    } else {
        std::cout << "instances: " << r.entries.size() << '\n';
        for (const auto& [k, v] : r.counts) std::cout << "  " << k << ": " << v << '\n';
        for (const auto& e : r.entries)
            if (!e.error.empty()) std::cout << "error: " << e.instance << ": " << e.error << '\n';
    }
    for (const auto& e : r.entries)
        if (!conclusive(e.conclusion)) return exit_undecided;
    return exit_conclusive;
}

int cmd_replay(const Globals& g, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot read " + file);
    Certificate c = certificate_from_json(Json::parse(in));
    ReplayReport rep = replay(c);
    if (g.json)
        std::cout << Json{{"replayed", c.steps.size()}, {"ok", rep.ok}, {"mismatches", rep.mismatches}}.dump(2) << '\n';
    else {
        std::cout << "replayed " << c.steps.size() << " steps: " << (rep.ok ? "ok" : "MISMATCH") << '\n';
        for (const auto& m : rep.mismatches) std::cout << "  " << m << '\n';
    }
    return rep.ok ? exit_conclusive : exit_error;
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    bool json_requested = false;
    for (int i = 1; i < argc; ++i) json_requested = json_requested || std::strcmp(argv[i], "--json") == 0;

    CLI::App app{"Certification tools for power-sum common-zero problems"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", g.precision, "starting working precision in bits")->capture_default_str();
    app.add_option("--max-precision", g.max_precision, "precision cap in bits (default: PSCERT_MAX_PRECISION or 16384)");
    app.add_option("--threads", g.threads, "worker threads for sweeps");
    app.add_flag("--json", g.json, "machine-readable output");

    int n = 0, digits = 20;
    long a = 1, b = 0, c = 0;
    std::vector<long> exps, set;
    std::uint64_t p = 0;
    std::string target, gens, file, emit;
    std::size_t nvars = 0;
    std::function<int()> run;

    auto* pq = app.add_subcommand("pq", "P_n, its trivial factor C_n and the quotient Q_n");
    pq->add_option("--n", n)->required();
    pq->callback([&] { run = [&] { return cmd_pq(g, n); }; });

    auto* pair = app.add_subcommand("pair", "common zeros of P_b and P_c");
    pair->add_option("--b", b)->required();
    pair->add_option("--c", c)->required();
    pair->callback([&] { run = [&] { return finish(g, certify_pair(b, c)); }; });

    auto* triple = app.add_subcommand("triple", "common zeros of the three-exponent system");
    triple->add_option("--a", a)->required();
    triple->add_option("--b", b)->required();
    triple->add_option("--c", c)->required();
    triple->callback([&] { run = [&] { return finish(g, certify_triple(a, b, c)); }; });

    auto* regseq = app.add_subcommand("regseq", "is p_a, p_b(, p_c) a regular sequence");
    regseq->add_option("--exps", exps)->required()->delimiter(',');
    regseq->add_option("--char", p, "field characteristic (0 for Q)");
    regseq->callback([&] { run = [&] { return finish(g, certify_regseq(exps, p)); }; });

    auto* modp = app.add_subcommand("modp", "regular-sequence check over F_p");
    modp->add_option("--exps", exps)->required()->delimiter(',')->expected(3);
    modp->add_option("--p", p)->required();
    modp->callback([&] { run = [&] { return finish(g, certify_regseq(exps, p)); }; });

    auto* crit = app.add_subcommand("criteria", "divisibility criteria for an exponent set");
    crit->add_option("--set", set)->required()->delimiter(',');
    crit->callback([&] { run = [&] { return finish(g, certify_criteria(set)); }; });

    auto* norm = app.add_subcommand("normal4", "normality of C[x1..x4]/(p_a, p_b)");
    norm->add_option("--a", a)->required();
    norm->add_option("--b", b)->required();
    norm->callback([&] { run = [&] { return finish(g, certify_normal4(a, b)); }; });

    auto* member = app.add_subcommand("member", "graded ideal membership");
    member->add_option("--target", target, "polynomial, e.g. p5 or x1^2*x2")->required();
    member->add_option("--gens", gens, "comma-separated generators, e.g. p1,p2")->required();
    member->add_option("--nvars", nvars)->required()->check(CLI::Range(1, 64));
    member->callback([&] { run = [&] { return finish(g, certify_membership(target, split(gens, ",;"), nvars)); }; });

    auto* roots = app.add_subcommand("roots", "certified roots of Q_n on Re z = -1/2");
    roots->add_option("--n", n)->required();
    roots->add_option("--digits", digits)->capture_default_str();
    roots->callback([&] { run = [&] { return cmd_roots(g, n, digits); }; });

    auto* cert = app.add_subcommand("certify", "emptiness pipeline for a = 1");
    cert->add_option("--a", a)->required();
    cert->add_option("--b", b)->required();
    cert->add_option("--emit", emit, "write the certificate JSON to FILE");
    cert->callback([&] {
        run = [&] {
            if (a != 1) throw CLI::ValidationError("--a", "certify supports a = 1; use bounds for a >= 2");
            Certificate cc = certify_a1(static_cast<int>(b), g.options());
            if (!emit.empty()) write_json_file(emit, to_json(cc));
            return finish(g, cc);
        };
    });

    auto* bounds = app.add_subcommand("bounds", "general-case bound functions");
    bounds->add_option("--a", a)->required();
    std::optional<int> bopt;
    bounds->add_option("--b", bopt);
    bounds->callback([&] { run = [&] { return finish(g, certify_general_bounds(static_cast<int>(a), bopt, g.options())); }; });

    auto* sweep = app.add_subcommand("sweep", "parameter sweep from a JSON spec");
    sweep->add_option("--spec", file)->required();
    sweep->callback([&] { run = [&] { return cmd_sweep(g, file); }; });

    auto* rep = app.add_subcommand("replay", "re-run a certificate's steps");
    rep->add_option("--cert", file)->required();
    rep->callback([&] { run = [&] { return cmd_replay(g, file); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (json_requested) return report_error(true, "usage", e.what());
        return app.exit(e) == 0 ? exit_conclusive : exit_error;
    }

    try {
        return run();
    } catch (const CLI::Error& e) {
        return report_error(g.json, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(g.json, "usage", e.what());
    } catch (const std::domain_error& e) {
        return report_error(g.json, "usage", e.what());
    } catch (const std::exception& e) {
        return report_error(g.json, "internal", e.what());
    }
}
