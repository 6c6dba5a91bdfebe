#include "support.hpp"

#include <random>
#include <sstream>

#include "hyperball/transform.hpp"

using namespace hyperball;
using namespace hyperball::test;

namespace {

double bump(double r) {
    if (r >= 0.85) return 0.0;
    const double s = r / 0.85;
    return std::exp(-8.0 * r * r) * std::exp(1.0 - 1.0 / (1.0 - s * s * s * s));
}

const BallField radial_bump = [](const CVec& z) { return cplx(bump(std::sqrt(z.squaredNorm()))); };

}  // namespace

TEST_CASE("Poisson kernel against the oracle") {
    const Parameters p = make_parameters(1, 2.5);
    for (const CsvRow& r : oracle_rows("poisson"))
        CHECK(rel(poisson_kernel(p, num(r, "t"), BallPoint::scalar(cnum(r, "z")), BoundaryPoint::scalar(cnum(r, "w"))),
                  cnum(r, "value")) < 1e-14);
}

TEST_CASE("Poisson kernels are eigenfunctions of Delta_nu") {
    std::mt19937_64 rng(21);
    for (const auto& [n, nu] : {std::pair{1, 2.5}, std::pair{2, 3.5}}) {
        const Parameters p = make_parameters(n, nu);
        const BoundaryPoint om(CVec::Unit(n, 0));
        for (double l : {0.5, 2.0}) {
            const BallPoint z = random_ball_point(n, rng, 0.6);
            const cplx lap = apply_delta_nu(p, [&](const CVec& v) { return poisson_kernel(p, l, BallPoint(v), om); }, z,
                                            {1e-3, true});
            CHECK(rel(lap, -(l * l + p.gap() * p.gap()) * poisson_kernel(p, l, z, om)) < 1e-6);
        }
    }
}

TEST_CASE("spherical function is the sphere average of the Poisson kernel") {
    for (const auto& [n, nu] : {std::pair{1, 2.5}, std::pair{2, 3.5}}) {
        const Parameters p = make_parameters(n, nu);
        const BallPoint z(CVec::Constant(n, cplx(0.3, 0.2)));
        for (double l : {0.7, 3.0}) {
            const cplx avg = integrate_sphere(n, [&](const CVec& w) { return poisson_kernel(p, l, z, BoundaryPoint(w)); }, 256);
            CHECK(rel(spherical_function(p, l, z), avg) < 1e-10);
        }
    }
}

TEST_CASE("spherical kernel: closed form against sphere quadrature") {
    const Parameters p = make_parameters(1, 2.5);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 4; ++i) {
        const BallPoint z = random_ball_point(1, rng), w = random_ball_point(1, rng);
        CHECK(rel(spherical_kernel_quadrature(p, 2.3, z, w), spherical_kernel(p, 2.3, z, w)) < 1e-8);
    }
}

TEST_CASE("forward transform against the high-node float64 reference") {
    const Parameters p = make_parameters(1, 2.5);
    ForwardOptions opt;
    opt.grid.radial = 256;
    opt.grid.angular = 256;
    for (const CsvRow& r : oracle_rows("fh_forward_bump")) {
        const cplx v = fh_forward(p, radial_bump, num(r, "t"), BoundaryPoint::scalar(cnum(r, "w")), opt);
        CHECK(rel(v, cnum(r, "value")) < 1e-10);
    }
}

TEST_CASE("forward transform refuses fields outside the support radius") {
    const Parameters p = make_parameters(1, 2.5);
    const BallField wide = [](const CVec& z) { return cplx(1.0 - z.squaredNorm()); };
    CHECK_THROWS_AS(fh_forward(p, wide, 1.0, BoundaryPoint::scalar(1.0)), DomainError);
}

TEST_CASE("radial Helgason grid matches the general grid") {
    const Parameters p = make_parameters(1, 2.5);
    HelgasonGridSpec spec;
    spec.lambda_max = 10.0;
    spec.panels = 5;
    spec.panel_points = 4;
    spec.angular = 16;
    const HelgasonGrid general = helgason_grid(p, radial_bump, spec);
    spec.radial = true;
    const HelgasonGrid radial = helgason_grid(p, radial_bump, spec);
    REQUIRE(general.plus.size() == radial.plus.size());
    for (std::size_t i = 0; i < general.plus.size(); ++i) CHECK(rel(radial.plus[i], general.plus[i]) < 1e-9);

    std::ostringstream os;
    write_helgason_csv(os, radial.samples());
    const std::string csv = os.str();
    CHECK(csv.rfind("lambda,omega1_re,omega1_im,value_re,value_im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 20 * 16);
}

TEST_CASE("inversion round trip up to the global factor") {
    const Parameters p = make_parameters(1, 2.5);
    HelgasonGridSpec spec;
    spec.radial = true;
    const HelgasonGrid g = helgason_grid(p, radial_bump, spec);
    for (double r : {0.0, 0.3, 0.6}) {
        const QuadResult q = fh_inverse(p, g, BallPoint::scalar(r));
        CHECK(q.diag.converged);
        CHECK(q.value.real() / bump(r) == doctest::Approx(2.0).epsilon(1e-5));
    }
    const QuadResult zero = fh_inverse(p, zero_helgason_grid(p, spec), BallPoint::scalar(0.2));
    CHECK(zero.value == cplx(0.0));
}
