#pragma once

// Parameter sweeps over pairs, triples or (triple, prime) instances on a
// bounded worker pool. Results are indexed by instance, so the output does
// not depend on the number of workers.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <thread>

#include "pscert/pipeline/certify.hpp"

namespace pscert {

struct SweepFilter {
    long d = 1;
    bool negate = false;
    std::string vars;  // subset of "abc"; the product of these exponents is tested
    bool gcd_one = false;

    bool accepts(long a, long b, long c) const {
        if (gcd_one) return std::gcd(std::gcd(a, b), c) == 1;
        long long prod = 1;
        for (char v : vars) prod = prod * (v == 'a' ? a : v == 'b' ? b : c) % d;
        return (prod % d == 0) != negate;
    }
};

/// "6|bc", "2!|bc" or "gcd=1".
inline SweepFilter parse_sweep_filter(const std::string& text) {
    SweepFilter f;
    if (text == "gcd=1") {
        f.gcd_one = true;
        return f;
    }
    static const std::regex re(R"(^\s*(\d+)\s*(!?)\|\s*([abc]+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw DomainError("bad sweep filter '" + text + "'");
    f.d = std::stol(m[1]);
    if (f.d < 1) throw DomainError("sweep filter divisor must be positive");
    f.negate = m[2] == "!";
    f.vars = m[3];
    return f;
}

struct SweepSpec {
    std::string mode;  // pair-a1, triple, mod-p
    std::map<std::string, std::pair<long, long>> ranges;
    std::vector<std::vector<long>> instances;  // explicit exponent triples (mod-p)
    std::vector<std::uint64_t> primes;
    std::vector<SweepFilter> filters;
    unsigned threads = 1;
    std::optional<std::filesystem::path> output;
};

inline constexpr std::size_t sweep_instance_limit = 1'000'000;

inline SweepSpec parse_sweep_spec(const Json& j) {
    SweepSpec s;
    s.mode = j.at("mode").get<std::string>();
    if (s.mode != "pair-a1" && s.mode != "triple" && s.mode != "mod-p") throw DomainError("unknown sweep mode '" + s.mode + "'");
    const Json ranges = j.value("ranges", Json::object());
    for (const auto& [k, v] : ranges.items()) {
        if (k != "a" && k != "b" && k != "c") throw DomainError("unknown range '" + k + "'");
        auto r = v.get<std::vector<long>>();
        if (r.size() != 2 || r[0] > r[1]) throw DomainError("range '" + k + "' must be [lo, hi] with lo <= hi");
        s.ranges[k] = {r[0], r[1]};
    }
    s.instances = j.value("instances", std::vector<std::vector<long>>{});
    for (const auto& e : s.instances)
        if (e.size() != 3) throw DomainError("sweep instances are exponent triples");
    s.primes = j.value("primes", std::vector<std::uint64_t>{});
    for (const auto& f : j.value("filters", std::vector<std::string>{})) s.filters.push_back(parse_sweep_filter(f));
    s.threads = std::max(1u, j.value("threads", 1u));
    if (j.contains("output")) s.output = j.at("output").get<std::string>();

    auto need = [&](const char* k) {
        if (!s.ranges.count(k)) throw DomainError(std::string("sweep mode ") + s.mode + " needs range '" + k + "'");
    };
    if (s.mode == "pair-a1") {
        need("b");
        need("c");
    } else if (s.mode == "triple" || s.instances.empty()) {
        need("a");
        need("b");
        need("c");
    }
    if (s.mode == "mod-p" && s.primes.empty()) throw DomainError("mod-p sweep needs primes");
    return s;
}

struct SweepInstance {
    std::vector<long> exps;  // (1, b, c) for pair-a1
    std::uint64_t prime = 0;

    std::string name(const std::string& mode) const {
        std::string s = mode == "pair-a1" ? "pair" : mode == "triple" ? "triple" : "modp";
        for (long e : exps) s += "-" + std::to_string(e);
        if (prime) s += "-" + std::to_string(prime);
        return s;
    }
};

inline std::vector<SweepInstance> enumerate_instances(const SweepSpec& s) {
    std::vector<SweepInstance> out;
    auto keep = [&](long a, long b, long c) {
        for (const auto& f : s.filters)
            if (!f.accepts(a, b, c)) return false;
        return true;
    };
    auto push = [&](std::vector<long> e, std::uint64_t p) {
        if (out.size() >= sweep_instance_limit) throw DomainError("sweep exceeds the instance limit");
        out.push_back({std::move(e), p});
    };
    std::vector<std::vector<long>> triples;
    if (s.mode == "pair-a1") {
        auto [b0, b1] = s.ranges.at("b");
        auto [c0, c1] = s.ranges.at("c");
        for (long b = std::max(2L, b0); b <= b1; ++b)
            for (long c = std::max(b + 1, c0); c <= c1; ++c)
                if (keep(1, b, c)) push({1, b, c}, 0);
        return out;
    }
    if (!s.instances.empty()) {
        triples = s.instances;
    } else {
        auto [a0, a1] = s.ranges.at("a");
        auto [b0, b1] = s.ranges.at("b");
        auto [c0, c1] = s.ranges.at("c");
        for (long a = std::max(s.mode == "triple" ? 2L : 1L, a0); a <= a1; ++a)
            for (long b = std::max(a + 1, b0); b <= b1; ++b)
                for (long c = std::max(b + 1, c0); c <= c1; ++c) {
                    if (triples.size() >= sweep_instance_limit) throw DomainError("sweep exceeds the instance limit");
                    triples.push_back({a, b, c});
                }
    }
    for (const auto& t : triples) {
        if (!keep(t[0], t[1], t[2])) continue;
        if (s.mode == "triple")
            push(t, 0);
        else
            for (auto p : s.primes) push(t, p);
    }
    return out;
}

/// Summary bucket for a certificate conclusion.
inline std::string sweep_category(const Certificate& c) {
    const std::string& k = c.conclusion;
    if (k == "empty" || k == "Regular") return "empty";
    if (k == "nonempty-trivial") return "nonempty-trivial";
    if (k == "NotRegular") return c.steps.back().outputs.contains("trivial_witness") ? "nonempty-trivial" : "candidate";
    if (k == "nonempty" || k == "candidate") return "candidate";
    return "undecided";
}

struct SweepEntry {
    std::string instance;
    std::string conclusion;
    std::string category;
    std::string error;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    std::map<std::string, std::size_t> counts;
    Json summary;
};

inline Certificate run_instance(const std::string& mode, const SweepInstance& inst) {
    try {
        if (mode == "pair-a1") return certify_pair(inst.exps[1], inst.exps[2]);
        if (mode == "triple") return certify_triple(inst.exps[0], inst.exps[1], inst.exps[2]);
        return certify_regseq(inst.exps, inst.prime);
    } catch (const std::exception& e) {
        Certificate c;
        c.kind = mode == "pair-a1" ? "pair" : mode;
        c.inputs = Json{{"exponents", inst.exps}};
        if (inst.prime) c.inputs["characteristic"] = inst.prime;
        c.error = e.what();
        c.conclusion = "undecided";
        return c;
    }
}

inline void write_json_file(const std::filesystem::path& p, const Json& j) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << j.dump(2) << '\n';
}

/// Run every instance; `threads` overrides the spec when nonzero.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0) {
    const auto instances = enumerate_instances(spec);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads ? threads : spec.threads,
                                                             static_cast<unsigned>(std::max<std::size_t>(1, instances.size()))));
    if (spec.output) std::filesystem::create_directories(*spec.output);

    std::vector<SweepEntry> entries(instances.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            const std::string name = instances[i].name(spec.mode);
            Certificate c = run_instance(spec.mode, instances[i]);
            SweepEntry e{name, c.conclusion, sweep_category(c), c.error};
            if (spec.output) {
                try {
                    write_json_file(*spec.output / (name + ".json"), to_json(c));
                } catch (const std::exception& ex) {
                    e.error = ex.what();
                    e.category = "undecided";
                }
            }
            entries[i] = std::move(e);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    }

    SweepResult res;
    res.counts = {{"empty", 0}, {"nonempty-trivial", 0}, {"candidate", 0}, {"undecided", 0}};
    Json results = Json::array(), errors = Json::array();
    for (const auto& e : entries) {
        ++res.counts[e.category];
        results.push_back(Json{{"instance", e.instance}, {"conclusion", e.conclusion}, {"category", e.category}});
        if (!e.error.empty()) errors.push_back(Json{{"instance", e.instance}, {"error", e.error}});
    }
    Json counts = Json::object();
    for (const char* k : {"empty", "nonempty-trivial", "candidate", "undecided"}) counts[k] = res.counts[k];
    res.summary = Json{{"schema", certificate_schema}, {"mode", spec.mode}, {"instances", entries.size()},
                       {"counts", counts}, {"errors", errors}, {"results", results}};
    if (spec.output) write_json_file(*spec.output / "summary.json", res.summary);
    res.entries = std::move(entries);
    return res;
}

}  // namespace pscert
