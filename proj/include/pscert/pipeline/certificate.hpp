#pragma once

// Replayable certificates: an ordered list of steps, each an operation name
// with its recorded inputs, exact or enclosed outputs and a verdict.

#include <string>
#include <vector>

#include <json.hpp>

#include "pscert/analytic/bounds.hpp"

namespace pscert {

using Json = nlohmann::ordered_json;

inline constexpr int certificate_schema = 1;
inline constexpr const char* tool_version = "pscert 0.1.0";

struct Step {
    std::string op;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::string verdict;
};

struct PrecisionAttempt {
    std::string op;
    Precision bits = 0;
    std::string verdict;
};

struct Certificate {
    std::string kind;
    Json inputs = Json::object();
    std::vector<Step> steps;
    std::vector<std::string> caveats;
    std::vector<std::string> comments;
    std::vector<PrecisionAttempt> precision_trace;
    std::string conclusion;
    std::string error;  // set only when an instance failed outright

    const Step* last(const std::string& op) const {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            if (it->op == op) return &*it;
        return nullptr;
    }
};

// --- exact serialization of numbers ------------------------------------------

inline Json to_json(const RealInterval& x) {
    return Json{{"lo", x.lo_hex()}, {"hi", x.hi_hex()}, {"bits", x.prec()}};
}

inline RealInterval interval_from_json(const Json& j) {
    return RealInterval::parse_bounds(j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
                                      j.at("bits").get<Precision>());
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    Json in = Json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    j["value"] = to_json(r.value);
    if (r.integer_value) j["integer_value"] = r.integer_value->get_str();
    Json enc = Json::object();
    for (const auto& [k, v] : r.enclosures) enc[k] = to_json(v);
    j["enclosures"] = enc;
    j["note"] = r.note;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline Json to_json(const Step& s) {
    return Json{{"op", s.op}, {"inputs", s.inputs}, {"outputs", s.outputs}, {"verdict", s.verdict}};
}

inline Json to_json(const Certificate& c) {
    Json j;
    j["schema"] = certificate_schema;
    j["kind"] = c.kind;
    j["tool_version"] = tool_version;
    j["inputs"] = c.inputs;
    Json steps = Json::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    j["steps"] = steps;
    j["caveats"] = c.caveats;
    j["comments"] = c.comments;
    Json trace = Json::array();
    for (const auto& a : c.precision_trace) trace.push_back(Json{{"op", a.op}, {"bits", a.bits}, {"verdict", a.verdict}});
    j["precision_trace"] = trace;
    j["conclusion"] = c.conclusion;
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    if (j.at("schema").get<int>() != certificate_schema)
        throw DomainError("unsupported certificate schema " + j.at("schema").dump());
    Certificate c;
    c.kind = j.at("kind").get<std::string>();
    c.inputs = j.at("inputs");
    for (const auto& s : j.at("steps"))
        c.steps.push_back(Step{s.at("op").get<std::string>(), s.at("inputs"), s.at("outputs"),
                               s.at("verdict").get<std::string>()});
    c.caveats = j.value("caveats", std::vector<std::string>{});
    c.comments = j.value("comments", std::vector<std::string>{});
    for (const auto& a : j.value("precision_trace", Json::array()))
        c.precision_trace.push_back(
            PrecisionAttempt{a.at("op").get<std::string>(), a.at("bits").get<Precision>(), a.at("verdict").get<std::string>()});
    c.conclusion = j.at("conclusion").get<std::string>();
    c.error = j.value("error", std::string());
    return c;
}

}  // namespace pscert
