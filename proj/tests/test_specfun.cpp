#include "support.hpp"

#include "hyperball/specfun.hpp"

using namespace hyperball;
using namespace hyperball::test;

TEST_CASE("2F1 against the 50-digit oracle grid") {
    const auto rows = read_csv(fixture_directory() + "/specfun_oracle.csv");
    REQUIRE(rows.size() == 200);
    double worst = 0.0;
    for (const CsvRow& r : rows) {
        const HypergeometricArgs args{cnum(r, "a"), cnum(r, "b"), cnum(r, "c"), num(r, "x")};
        const SeriesResult s = gauss_2f1(args);
        CHECK(s.converged);
        worst = std::max(worst, rel(s.value, cnum(r, "f")));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("log gamma and the Harish-Chandra c-function against the oracle") {
    for (const CsvRow& r : oracle_rows("log_gamma_abs"))
        CHECK(log_gamma(cnum(r, "z")).real() == doctest::Approx(num(r, "value_re")).epsilon(1e-13));
    const Parameters p = make_parameters(1, 2.5);
    for (const CsvRow& r : oracle_rows("harish_chandra_c"))
        CHECK(rel(harish_chandra_c(p, num(r, "t")), cnum(r, "value")) < 1e-13);
    for (const CsvRow& r : oracle_rows("plancherel_weight"))
        CHECK(plancherel_weight(p, num(r, "t")) == doctest::Approx(num(r, "value_re")).epsilon(1e-13));
}

TEST_CASE("|Gamma(i l)|^2 l sinh(pi l) / pi = 1") {
    for (double l = 0.1; l <= 30.0; l += 0.37) {
        const double v = std::exp(2.0 * log_gamma(cplx(0.0, l)).real()) * l * std::sinh(pi * l) / pi;
        CHECK(std::abs(v - 1.0) < 1e-12);
    }
}

TEST_CASE("2F1 poles and domain") {
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.3), PoleError);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 1.0, 1.0), DomainError);
    // terminating numerator before the c pole is allowed
    CHECK(hyp2f1(-1.0, 2.0, -3.0, 0.5) == cplx(1.0 + (-1.0 * 2.0) / (-3.0) * 0.5));
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
}

TEST_CASE("2F1 on both sides of the x = -1 formula switch") {
    // mpmath hyp2f1 at 40 digits
    const cplx a(-1.8, -4.3315), b(-1.8, 4.3315), c(3.0, 0.0);
    CHECK(hyp2f1(a, b, c, -1.2).real() == doctest::Approx(0.15189641650971269).epsilon(1e-13));
    CHECK(hyp2f1(a, b, c, -0.99).real() == doctest::Approx(hyp2f1(a, b, c, -1.01).real()).epsilon(0.05));
    CHECK(hyp2f1(a, b, c, -1.99).real() == doctest::Approx(-0.035441292739853249).epsilon(1e-12));
    // elementary check: 2F1(1,1;2;x) = -log(1-x)/x, a-b integer so Pfaff throughout
    for (double x : {-0.5, -3.0, -50.0, 0.7})
        CHECK(hyp2f1(1.0, 1.0, 2.0, x).real() == doctest::Approx(-std::log1p(-x) / x).epsilon(1e-14));
    // 2F1(a,b;b;x) = (1-x)^{-a} with a-b off the integers
    CHECK(hyp2f1(0.3, 1.7, 1.7, -4.0).real() == doctest::Approx(std::pow(5.0, -0.3)).epsilon(1e-14));
}

TEST_CASE("Jacobi polynomial agrees with the hypergeometric sum and the Legendre case") {
    // P_2^{(0,0)}(y) = (3y^2 - 1)/2
    CHECK(jacobi_polynomial(2, 0.0, 0.0, 0.3) == doctest::Approx((3 * 0.09 - 1) / 2));
    CHECK(jacobi_polynomial(0, 0.0, -2.5, 7.0) == 1.0);
    // P_1^{(a,b)}(y) = (a+1) + (a+b+2)(y-1)/2
    CHECK(jacobi_polynomial(1, 0.0, -3.5, 5.0) == doctest::Approx(1.0 + (-1.5) * 2.0));
}

TEST_CASE("Jacobi function on both sides of the asymptotic switch") {
    // mpmath 2F1((rho+il)/2, (rho-il)/2; 1; -sinh^2 t), (alpha, beta) = (0, -2.5)
    struct Ref {
        double t, l, phi;
    };
    for (const Ref& r : {Ref{0.3, 17.163692134445014, -0.11996477030282522},
                         Ref{0.3, 17.1636921687724, -0.11996476650552028},
                         Ref{0.8, 7.5297035026888279, 0.3755216401137904},
                         Ref{0.8, 7.529703517748235, 0.37552164430995605},
                         Ref{1.5, 5.5239569593886033, -0.12994098905302764},
                         Ref{1.5, 5.523956970436517, -0.12994100886045115}})
        CHECK(std::abs(jacobi_function(r.l, 0.0, -2.5, r.t).real() - r.phi) < 1e-13);
    CHECK(jacobi_function(3.0, 0.0, -2.5, 0.0) == cplx(1.0));
}

TEST_CASE("outgoing amplitude reproduces |c|^-2 phi") {
    const Parameters p = make_parameters(1, 2.5);
    for (double l : {6.0, 15.0, 40.0})
        for (double t : {0.5, 1.2}) {
            const cplx a = jacobi_outgoing_amplitude(l, 0.0, -2.5, t);
            const double lhs = plancherel_weight(p, l) * jacobi_function(l, 0.0, -2.5, t).real();
            CHECK(2.0 * (std::exp(I * l * t) * a).real() == doctest::Approx(lhs).epsilon(1e-10));
        }
}
