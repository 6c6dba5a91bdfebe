#include "support.hpp"

#include "hyperball/params.hpp"

using namespace hyperball;

TEST_CASE("parameters reject nu <= n and integer nu") {
    CHECK_THROWS_AS(make_parameters(1, 0.5), DomainError);
    CHECK_THROWS_AS(make_parameters(1, 1.0), DomainError);
    CHECK_THROWS_AS(make_parameters(1, 3.0), DomainError);
    CHECK_THROWS_AS(make_parameters(1, 3.0 + 1e-12), DomainError);
    CHECK_THROWS_AS(make_parameters(0, 2.5), DomainError);
    CHECK_NOTHROW(make_parameters(1, 3.0 + 1e-6));
    CHECK_NOTHROW(make_parameters(1, 3.0 + 1e-12, 1e-13));
}

TEST_CASE("point spectrum: atoms j < (nu-n)/2") {
    const Parameters p = make_parameters(1, 2.5);
    const auto atoms = discrete_spectrum(p);
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].lambda == cplx(0.0, -1.5));
    CHECK(atoms[0].s == doctest::Approx(-2.25));
    CHECK(atoms[0].rho == 0.0);

    const Parameters q = make_parameters(1, 3.5);
    REQUIRE(atom_count(q) == 2);
    const auto b = discrete_spectrum(q);
    CHECK(b[1].s == doctest::Approx(-0.25));
    CHECK(b[1].rho == doctest::Approx(4.0 * 1 * (1 + 1 - 3.5)));

    CHECK(atom_count(make_parameters(2, 2.5)) == 1);  // j = 0 exists for every nu > n
    CHECK(atom_count(make_parameters(2, 4.1)) == 2);
}

TEST_CASE("projector constant is twice the eigenspace reproducing constant") {
    for (const auto& [n, nu] : {std::pair{1, 2.5}, std::pair{1, 3.5}, std::pair{2, 4.7}}) {
        const Parameters p = make_parameters(n, nu);
        for (const SpectrumAtom& a : discrete_spectrum(p)) {
            CHECK(a.c == doctest::Approx(projector_constant(p, a.j)).epsilon(1e-15));
            CHECK(a.c / eigenspace_reproducing_constant(p, a.j) == doctest::Approx(2.0).epsilon(1e-14));
            CHECK(a.tau == doctest::Approx(a.c * pochhammer(1.0, a.j) / pochhammer(n, a.j)));
        }
    }
    // c_0 for n = 1, nu = 2.5: 2 (nu-1) / pi
    CHECK(projector_constant(make_parameters(1, 2.5), 0) == doctest::Approx(3.0 / pi).epsilon(1e-15));
}

TEST_CASE("resolvent abscissa") {
    // max |s_j| - (nu-n)^2 = 0 whenever an atom exists at j = 0
    CHECK(resolvent_abscissa(make_parameters(1, 2.5)) == doctest::Approx(0.0));
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
    CHECK(pochhammer(2.0, 0) == 1.0);
}
