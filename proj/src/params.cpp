#include "hyperball/params.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <cmath>

namespace hyperball {

void validate(const Parameters& p, double integrality_tol) {
    if (p.n < 1) throw DomainError("n must be a positive integer");
    if (!std::isfinite(p.nu)) throw DomainError("nu must be finite");
    if (!(p.nu > p.n)) throw DomainError("nu must exceed n");
    if (std::abs(p.nu - std::round(p.nu)) < integrality_tol)
        throw DomainError("nu must be non-integer");
}

Parameters make_parameters(int n, double nu, double integrality_tol) {
    Parameters p{n, nu};
    validate(p, integrality_tol);
    return p;
}

int atom_count(const Parameters& p) {
    return static_cast<int>(std::floor(p.gap() / 2.0)) + 1;
}

double pochhammer(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

namespace {

// Γ(n+j)/(Γ(n) j!) · (ν−n−2j) Γ(ν−j)/Γ(ν−n−j+1) / πⁿ, in log space for the gammas.
double base_constant(const Parameters& p, int j) {
    const double n = p.n;
    const double lg = gsl_sf_lngamma(n + j) - gsl_sf_lngamma(n) - gsl_sf_lngamma(j + 1.0) +
                      gsl_sf_lngamma(p.nu - j) - gsl_sf_lngamma(p.nu - n - j + 1.0);
    return (p.nu - n - 2.0 * j) * std::exp(lg) / std::pow(pi, n);
}

}  // namespace

double projector_constant(const Parameters& p, int j) { return 2.0 * base_constant(p, j); }

double eigenspace_reproducing_constant(const Parameters& p, int j) { return base_constant(p, j); }

std::vector<SpectrumAtom> discrete_spectrum(const Parameters& p) {
    validate(p);
    std::vector<SpectrumAtom> atoms;
    const int count = atom_count(p);
    atoms.reserve(count);
    for (int j = 0; j < count; ++j) {
        SpectrumAtom a;
        a.j = j;
        const double g = p.gap() - 2.0 * j;
        a.lambda = cplx(0.0, -g);
        a.s = -g * g;
        a.rho = 4.0 * j * (j + p.n - p.nu);
        a.c = projector_constant(p, j);
        a.tau = a.c * std::tgamma(j + 1.0) / pochhammer(p.n, j);
        atoms.push_back(a);
    }
    return atoms;
}

double resolvent_abscissa(const Parameters& p) {
    double m = 0.0;
    for (const auto& a : discrete_spectrum(p)) m = std::max(m, std::abs(a.s));
    return m - p.gap() * p.gap();
}

}  // namespace hyperball
