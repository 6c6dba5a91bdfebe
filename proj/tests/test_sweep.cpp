#include "support.hpp"

#include "hyperball/profile.hpp"
#include "hyperball/sweep.hpp"

using namespace hyperball;
using hyperball::test::rel;

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
    const Parameters p = make_parameters(1, 2.5);
    const BallPoint z = BallPoint::scalar(cplx(0.1, 0.05));
    std::vector<BallPoint> ws;
    for (int k = 0; k < 24; ++k) ws.push_back(BallPoint::scalar(0.8 * std::polar(k / 24.0, 0.3 * k)));
    const PointKernel k = [&](const BallPoint& w) { return heat_kernel(p, 0.5, z, w); };
    const auto par = sweep_kernel(k, ws);
    const auto ref = sweep_kernel_reference(k, ws);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].value == ref[i].value);
        CHECK(par[i].diagnostics.nodes == ref[i].diagnostics.nodes);
    }
    CHECK(sweep_kernel(k, ws, Execution::serial)[7].value == ref[7].value);
}

TEST_CASE("map_indices keeps order and rethrows the lowest failing index") {
    const auto v = map_indices<int>(1000, [](std::size_t i) { return static_cast<int>(i * i % 97); }, Execution::parallel);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i % 97));
    try {
        for_each_index(
            200,
            [&](std::size_t i) {
                if (i % 50 == 17) throw std::runtime_error("index " + std::to_string(i));
            },
            Execution::parallel);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "index 17");
    }
    CHECK(sweep_threads() >= 1);
}

TEST_CASE("radial profile reproduces the kernel it was built from") {
    const Parameters p = make_parameters(1, 2.5);
    const auto heat = [&](double d) { return heat_radial(p, 0.4, d); };
    const RadialProfile prof = RadialProfile::build(heat, 0.0, 3.0, 64);
    for (double d : {0.0, 0.37, 1.3, 2.99}) CHECK(rel(prof(d), heat(d).value) < 1e-11);
    CHECK(prof.truncation_estimate() < 1e-12);
    CHECK_THROWS_AS(prof(3.5), DomainError);

    const auto res = [&](double d) { return resolvent_radial(p, 2.0, d); };
    const RadialProfile logp = RadialProfile::build(res, 0.01, 3.0, 64, RadialProfile::Variable::log_distance);
    for (double d : {0.02, 0.5, 2.5}) CHECK(rel(logp(d), res(d).value) < 1e-9);
    CHECK_THROWS_AS(RadialProfile::build(res, 0.0, 3.0, 8, RadialProfile::Variable::log_distance), DomainError);
}
