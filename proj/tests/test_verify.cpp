#include "support.hpp"

#include <cstdlib>

#include "hyperball/verify.hpp"

using namespace hyperball;

TEST_CASE("xi(mu) arithmetic") {
    // 2·2.5 − (−25 + 6.25 + 1)
    CHECK(green_xi(make_parameters(1, 2.5), cplx(0.0, 5.0)) == cplx(22.75, 0.0));
}

TEST_CASE("check registry") {
    const auto& names = check_names();
    CHECK(names.front() == "special_functions");
    CHECK(names.back() == "constant_audit");
    CHECK(names.size() == 16);
    CHECK_THROWS_AS(run_check("no_such_check", {}), std::invalid_argument);
}

TEST_CASE("report JSON keeps the field contract") {
    VerificationReport r;
    r.check = "demo";
    r.params["n"] = 1;
    r.lhs = cplx(1.0, 2.0);
    r.rhs = 0.5;
    r.ratio = 2.0;
    r.seed = 7;
    r.note("a");
    r.note("b");
    const nlohmann::ordered_json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"check", "params", "lhs", "rhs", "ratio", "ratio_cv", "abs_err", "rel_err",
                                           "nodes", "lambda_max", "seed", "passed", "notes"});
    CHECK(j["notes"] == "a; b");
    CHECK(j["lhs"]["im"] == 2.0);

    r.rhs_variants = {{"x", 1.0}, {"y", cplx(0.0, 1.0)}};
    const nlohmann::ordered_json v = to_json(r);
    CHECK_FALSE(v.contains("rhs"));
    CHECK(v["rhs_variants"][1]["label"] == "y");
    CHECK(to_json_string(r).back() == '\n');
}

TEST_CASE("ratio statistics") {
    const RatioStats s = ratio_stats({2.0, 2.0, 2.0});
    CHECK(s.mean == cplx(2.0));
    CHECK(s.cv == 0.0);
    const RatioStats t = ratio_stats({1.0, 3.0});
    CHECK(t.cv == doctest::Approx(0.5));
}

TEST_CASE("CSV reader handles quoted fields") {
    const auto rows = read_csv(fixture_directory() + "/kernel_oracle.csv");
    REQUIRE(rows.size() == 17);
    CHECK(rows.front().at("method") == "closed form, 50 digits");
    CHECK(rows[2].at("method") == "mpmath quad + quadosc");
}

TEST_CASE("fixture directory honours the environment override") {
    const std::string original = fixture_directory();
    setenv("HYPERBALL_FIXTURES", "/tmp/elsewhere", 1);
    CHECK(fixture_directory() == "/tmp/elsewhere");
    unsetenv("HYPERBALL_FIXTURES");
    CHECK(fixture_directory() == original);
}

TEST_CASE("integral formula checks: degenerate and single-sample inputs") {
    CheckRequest rq;
    rq.t = 0.0;
    rq.x = 0.1;
    const VerificationReport d = check_prop61(rq);
    CHECK(d.passed);
    CHECK(d.notes.find("degenerate t=0") != std::string::npos);

    // one sample cannot establish ratio-constancy
    const VerificationReport one = check_prop62(make_parameters(1, 2.5), cplx(0.0, 5.0), {0.5}, {});
    CHECK_FALSE(one.passed);
    CHECK(one.notes.find("at least 2 samples") != std::string::npos);
    CHECK(one.rhs_variants.size() == 2);

    CHECK_THROWS_AS(check_prop62(make_parameters(1, 2.5), cplx(0.0, 1.5), {0.5}, {}), DomainError);
    CHECK_THROWS_AS(check_prop62(make_parameters(1, 2.5), cplx(1.0, 0.0), {0.5}, {}), DomainError);
    CHECK_THROWS_AS(check_prop61(make_parameters(1, 2.5), {{1.0, 5.0}}, {}), DomainError);
    CHECK_THROWS_AS(check_prop61(make_parameters(2, 3.5), {{1.0, 0.1}}, {}), DomainError);
}

TEST_CASE("fast checks pass and are reproducible") {
    CheckRequest rq;
    const VerificationReport a = check_lemma31(rq);
    CHECK(a.passed);
    CHECK(to_json_string(a) == to_json_string(check_lemma31(rq)));
    rq.seed = 8;
    CHECK(to_json_string(a) != to_json_string(check_lemma31(rq)));
    CHECK(check_intertwining({}).passed);
}

TEST_CASE("constant audit needs all four sources and measures their spread") {
    std::vector<VerificationReport> src(4);
    const char* names[] = {"semigroup", "projectors", "inversion", "delta_pairing"};
    for (int i = 0; i < 4; ++i) {
        src[i].check = names[i];
        src[i].ratio = 2.0 + 0.001 * i;
    }
    const VerificationReport a = constant_audit(src, 7);
    CHECK(a.passed);
    CHECK(a.ratio.real() == doctest::Approx(2.0015));
    CHECK(a.notes.find("expected 1.0") != std::string::npos);
    src[3].ratio = 2.5;
    CHECK_FALSE(constant_audit(src, 7).passed);
    src.pop_back();
    CHECK_THROWS_AS(constant_audit(src, 7), std::invalid_argument);
}
