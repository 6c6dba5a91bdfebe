#include "hyperball/config.hpp"

#include <fstream>
#include <set>

namespace hyperball {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw DomainError(where + ": expected a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw DomainError(where + ": unknown key '" + key + "'");
}

template <class T>
T get(const json& j, const std::string& key, const std::string& where) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw DomainError(where + "." + key + ": wrong type");
    }
}

}  // namespace

RunConfig parse_run_config(const json& j) {
    reject_unknown(j, {"params", "spec", "seed", "output", "format"}, "config");
    RunConfig c;
    if (j.contains("params")) {
        const json& p = j["params"];
        reject_unknown(p, {"n", "nu"}, "config.params");
        c.params_given = true;
        if (p.contains("n")) c.params.n = get<int>(p, "n", "config.params");
        if (p.contains("nu")) c.params.nu = get<double>(p, "nu", "config.params");
    }
    if (j.contains("spec")) {
        const json& s = j["spec"];
        reject_unknown(s, {"rel_tol", "abs_tol", "lambda_max", "panel_points", "accel_terms"}, "config.spec");
        if (s.contains("rel_tol")) c.spec.rel_tol = get<double>(s, "rel_tol", "config.spec");
        if (s.contains("abs_tol")) c.spec.abs_tol = get<double>(s, "abs_tol", "config.spec");
        if (s.contains("lambda_max")) c.spec.lambda_max = get<double>(s, "lambda_max", "config.spec");
        if (s.contains("panel_points")) c.spec.panel_points = get<int>(s, "panel_points", "config.spec");
        if (s.contains("accel_terms")) c.spec.accel_terms = get<int>(s, "accel_terms", "config.spec");
    }
    if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed", "config");
    if (j.contains("output")) c.output = get<std::string>(j, "output", "config");
    if (j.contains("format")) {
        const std::string f = get<std::string>(j, "format", "config");
        if (f == "csv")
            c.format = OutputFormat::csv;
        else if (f == "json")
            c.format = OutputFormat::json;
        else
            throw DomainError("config.format: expected csv or json, got '" + f + "'");
    }
    validate(c);
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("config " + path + ": " + e.what());
    }
    return parse_run_config(j);
}

nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", c.params.n}, {"nu", c.params.nu}};
    j["spec"] = {{"rel_tol", c.spec.rel_tol},
                 {"abs_tol", c.spec.abs_tol},
                 {"lambda_max", c.spec.lambda_max},
                 {"panel_points", c.spec.panel_points},
                 {"accel_terms", c.spec.accel_terms}};
    j["seed"] = c.seed;
    j["output"] = c.output;
    j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
    return j;
}

void validate(const RunConfig& c) {
    validate(c.params);
    c.spec.validate();
}

}  // namespace hyperball
