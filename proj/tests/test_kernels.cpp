#include "support.hpp"

#include <random>

#include "hyperball/kernels.hpp"

using namespace hyperball;
using namespace hyperball::test;

namespace {

const Parameters p25 = make_parameters(1, 2.5);

BallPoint pt(const CsvRow& r, const char* stem) { return BallPoint::scalar(cnum(r, stem)); }

}  // namespace

TEST_CASE("kernels against the mpmath oracle") {
    for (const CsvRow& r : oracle_rows("density"))
        CHECK(rel(spectral_density_continuous(p25, num(r, "s"), pt(r, "z"), pt(r, "w")).value, cnum(r, "value")) < 1e-13);
    for (const CsvRow& r : oracle_rows("heat")) {
        const KernelValue k = heat_kernel(p25, num(r, "t"), pt(r, "z"), pt(r, "w"));
        CHECK(rel(k.value, cnum(r, "value")) < 1e-10);
        CHECK(k.diagnostics.converged);
    }
    for (const CsvRow& r : oracle_rows("resolvent"))
        CHECK(rel(resolvent_kernel(p25, cnum(r, "xi"), pt(r, "z"), pt(r, "w")).value, cnum(r, "value")) < 1e-10);
    for (const CsvRow& r : oracle_rows("closed_form_wave"))
        CHECK(rel(closed_form_wave_kernel(p25, num(r, "t"), pt(r, "z"), pt(r, "w")).value, cnum(r, "value")) < 1e-13);
    for (const CsvRow& r : oracle_rows("green"))
        CHECK(rel(green_kernel(p25, cnum(r, "mu"), pt(r, "z"), pt(r, "w")).value, cnum(r, "value")) < 1e-13);
}

TEST_CASE("spectral density vanishes off the continuum") {
    const BallPoint z = BallPoint::origin(1), w = BallPoint::scalar(0.4);
    CHECK(spectral_density_continuous(p25, -1.0, z, w).value == cplx(0.0));
    CHECK(spectral_density_continuous(p25, 0.0, z, w).value == cplx(0.0));
}

TEST_CASE("projector kernel: Jacobi and terminating 2F1 forms agree") {
    std::mt19937_64 rng(3);
    for (const auto& [n, nu] : {std::pair{1, 3.5}, std::pair{2, 4.7}}) {
        const Parameters p = make_parameters(n, nu);
        for (const SpectrumAtom& a : discrete_spectrum(p))
            for (int i = 0; i < 5; ++i) {
                const BallPoint z = random_ball_point(n, rng), w = random_ball_point(n, rng);
                CHECK(rel(projector_kernel(p, a, z, w).value, projector_kernel_hypergeometric(p, a, z, w).value) < 1e-12);
            }
    }
}

TEST_CASE("kernels are Hermitian: K(w,z) = conj K(z,w)") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 3; ++i) {
        const BallPoint z = random_ball_point(1, rng, 0.6), w = random_ball_point(1, rng, 0.6);
        CHECK(rel(heat_kernel(p25, 0.4, w, z).value, std::conj(heat_kernel(p25, 0.4, z, w).value)) < 1e-13);
        CHECK(rel(resolvent_kernel(p25, 1.5, w, z).value, std::conj(resolvent_kernel(p25, 1.5, z, w).value)) < 1e-13);
    }
}

TEST_CASE("heat kernel: t -> 0 concentrates, t -> infinity leaves the j = 0 projector") {
    const BallPoint z = BallPoint::scalar(0.2), w = BallPoint::scalar(-0.3);
    const SpectrumAtom a0 = discrete_spectrum(p25).front();
    const cplx limit = projector_kernel(p25, a0, z, w).value;
    CHECK(rel(heat_kernel(p25, 40.0, z, w).value, limit) < 1e-12);
    const double far = std::abs(heat_kernel(p25, 0.02, BallPoint::origin(1), BallPoint::scalar(0.8)).value);
    const double center = std::abs(heat_kernel(p25, 0.02, BallPoint::origin(1), BallPoint::origin(1)).value);
    CHECK(far < 1e-4 * center);
    CHECK_THROWS_AS(heat_kernel(p25, 0.0, z, w), DomainError);
}

TEST_CASE("resolvent preconditions") {
    const BallPoint z = BallPoint::scalar(0.2);
    CHECK_THROWS_AS(resolvent_kernel(p25, 1.0, z, z), DomainError);
    CHECK_THROWS_AS(resolvent_kernel(p25, -3.0, z, BallPoint::origin(1)), DomainError);  // on the cut
    CHECK_THROWS_AS(resolvent_kernel(p25, 0.0, z, BallPoint::origin(1)), DomainError);   // pole -rho_0 = 0
}

TEST_CASE("wave kernels: regime, parity, support") {
    const BallPoint z = BallPoint::origin(1), w = BallPoint::scalar(0.9);
    CHECK_THROWS_AS(wave_kernel(p25, 0.1, z, w), RegimeError);
    CHECK(wave_kernel(p25, 0.0, z, w).value == cplx(0.0));
    const BallPoint near = BallPoint::scalar(0.3);
    const cplx plus = wave_kernel(p25, 1.2, z, near).value, minus = wave_kernel(p25, -1.2, z, near).value;
    CHECK(std::abs(plus + minus) < 1e-10 * std::abs(plus));
    CHECK(closed_form_wave_kernel(p25, 0.5, z, w).value == cplx(0.0));
    CHECK_THROWS_AS(closed_form_wave_kernel(make_parameters(2, 3.5), 1.0, BallPoint::origin(2), BallPoint::origin(2)),
                    DomainError);
}

TEST_CASE("shifted wave and closed form differ by one constant") {
    std::vector<double> ratios;
    for (const auto& [t, r] : {std::pair{1.2, 0.3}, std::pair{1.8, 0.5}, std::pair{2.4, 0.1}})
        ratios.push_back(shifted_wave_radial(p25, t, std::atanh(r)).value.real() / closed_form_wave_radial(p25, t, std::atanh(r)));
    for (double q : ratios) CHECK(q == doctest::Approx(2.0 / std::sqrt(pi)).epsilon(1e-9));
}

TEST_CASE("Green kernel: lattice and coincidence are refused") {
    const BallPoint z = BallPoint::scalar(0.1), w = BallPoint::scalar(0.4);
    // (n - i mu - nu)/2 = 0 at mu = -i(n - nu) = 1.5i
    CHECK_THROWS_AS(green_kernel(p25, cplx(0.0, 1.5), z, w), DomainError);
    CHECK_THROWS_AS(green_kernel(p25, cplx(0.0, 5.0), z, z), DomainError);
    const cplx v = green_kernel(p25, cplx(0.0, 5.0), z, w, GreenExponent::verbatim).value;
    const cplx h = green_kernel(p25, cplx(0.0, 5.0), z, w, GreenExponent::halved).value;
    CHECK(std::abs(v - h) > 1e-3 * std::abs(v));
}

TEST_CASE("functional calculus of a decaying function matches the heat kernel") {
    const BallPoint z = BallPoint::scalar(0.1), w = BallPoint::scalar(0.35);
    const double t = 0.3;
    const double a2 = p25.gap() * p25.gap();
    // heat in the shifted spectral variable: e^{-t(s + (nu-n)^2)}
    const KernelValue f = functional_calculus(p25, [&](double s) { return cplx(std::exp(-t * (s + a2))); }, z, w, {});
    CHECK(rel(f.value, heat_kernel(p25, t, z, w).value) < 1e-10);
}
