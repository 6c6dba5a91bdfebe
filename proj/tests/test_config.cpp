#include "support.hpp"

#include "hyperball/config.hpp"

using namespace hyperball;
using nlohmann::json;

TEST_CASE("run config: defaults and overrides") {
    const RunConfig d = parse_run_config(json::object());
    CHECK(d.params.n == 1);
    CHECK(d.seed == 7);
    CHECK_FALSE(d.params_given);
    CHECK(d.format == OutputFormat::csv);

    const RunConfig c = parse_run_config(json::parse(
        R"({"params": {"n": 2, "nu": 3.5}, "spec": {"lambda_max": 80, "rel_tol": 1e-10}, "seed": 3, "format": "json"})"));
    CHECK(c.params.n == 2);
    CHECK(c.params.nu == 3.5);
    CHECK(c.params_given);
    CHECK(c.spec.lambda_max == 80.0);
    CHECK(c.spec.rel_tol == 1e-10);
    CHECK(c.seed == 3);
    CHECK(c.format == OutputFormat::json);
    CHECK(parse_run_config(to_json(c)).spec.lambda_max == 80.0);
}

TEST_CASE("run config: unknown keys and invalid values are rejected") {
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"sed": 3})")), DomainError);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"params": {"n": 1, "mu": 2}})")), DomainError);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"params": {"nu": 3.0}})")), DomainError);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"params": {"nu": "x"}})")), DomainError);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"format": "xml"})")), DomainError);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"spec": {"rel_tol": -1}})")), DomainError);
    CHECK_THROWS_AS(load_run_config("/nonexistent/config.json"), DomainError);
}
