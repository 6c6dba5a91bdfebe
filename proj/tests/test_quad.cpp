#include "support.hpp"

#include <gsl/gsl_sf_gamma.h>

#include "hyperball/quad.hpp"

using namespace hyperball;
using hyperball::test::rel;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const GaussRule& g = gauss_legendre(8);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 14);
    CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi weights sum to the beta function") {
    for (const auto& [a, b] : {std::pair{0.5, 0.0}, std::pair{-0.5, 1.0}, std::pair{2.3, 0.0}}) {
        const GaussRule r = gauss_jacobi_unit(24, a, b);
        double s = 0.0, m = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            s += r.weights[i];
            m += r.weights[i] * r.nodes[i];
        }
        CHECK(s == doctest::Approx(gsl_sf_beta(a + 1, b + 1)).epsilon(1e-13));
        CHECK(m == doctest::Approx(gsl_sf_beta(a + 1, b + 2)).epsilon(1e-13));
    }
}

TEST_CASE("oscillatory tail against the oracle") {
    // ∫_1^∞ e^{iλ}/λ² dλ, mpmath quadosc
    const QuadResult r = integrate_oscillatory_tail([](double l) { return cplx(1.0 / (l * l)); }, 1.0, 1.0, {});
    CHECK(rel(r.value, cplx(-0.084410950559573887, 0.50406706190692837)) < 1e-9);
    CHECK(r.diag.converged);
}

TEST_CASE("half-line integration flags a non-negligible tail") {
    QuadratureSpec spec;
    spec.lambda_max = 5.0;
    const QuadResult r = integrate_halfline([](double l) { return cplx(1.0 / (1.0 + l * l)); }, spec);
    CHECK_FALSE(r.diag.converged);
    spec.lambda_max = 60.0;
    const QuadResult ok = integrate_halfline([](double l) { return cplx(std::exp(-l)); }, spec);
    CHECK(ok.diag.converged);
    CHECK(ok.value.real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ball quadrature: weighted volume, rotation invariance, modes agree") {
    // ∫ dμ_ν = πⁿ Γ(ν−n)/Γ(ν), mpmath values
    CHECK(integrate_ball(make_parameters(1, 2.5), [](const CVec&) { return cplx(1.0); }).real() ==
          doctest::Approx(2.0943951023931955).epsilon(1e-13));
    CHECK(integrate_ball(make_parameters(2, 3.5), [](const CVec&) { return cplx(1.0); }).real() ==
          doctest::Approx(2.6318945069571623).epsilon(1e-13));

    const Parameters p = make_parameters(2, 3.5);
    const BallField f = [](const CVec& z) { return std::exp(z(0) + 0.5 * std::conj(z(1)) + z.squaredNorm()); };
    const cplx serial = integrate_ball(p, f, {}, Execution::serial);
    const cplx parallel = integrate_ball(p, f, {}, Execution::parallel);
    CHECK(serial == parallel);
    // holomorphic and antiholomorphic parts average out: only the |z|² part survives
    const cplx radial = integrate_ball_radial(p, [](double r) { return cplx(std::exp(r * r)); });
    CHECK(rel(serial, radial) < 1e-12);
    const cplx centered = integrate_ball_centered(p, f, BallPoint(CVec::Constant(2, cplx(0.2, 0.1))));
    CHECK(rel(centered, serial) < 1e-8);
}

TEST_CASE("sphere rule weights are a probability measure") {
    for (int n : {1, 2}) {
        const SphereRule r = sphere_rule(n, 32);
        double s = 0.0;
        for (double w : r.weights) s += w;
        CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(integrate_sphere(n, [](const CVec& w) { return std::norm(w(0)); }, 32) - 1.0 / n) < 1e-14);
    }
}
