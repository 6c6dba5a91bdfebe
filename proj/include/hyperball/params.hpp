#pragma once

#include <vector>

#include "hyperball/common.hpp"

namespace hyperball {

struct Parameters {
    int n = 1;
    double nu = 2.5;

    // ν − n, the recurring shift.
    double gap() const { return nu - n; }
};

// One line of the point spectrum of the shifted operator.
struct SpectrumAtom {
    int j = 0;
    cplx lambda;   // −i(ν−n−2j)
    double s = 0;  // λ_j² = −(ν−n−2j)²
    double rho = 0;  // Δ_ν eigenvalue 4j(j+n−ν)
    double c = 0;
    double tau = 0;  // c·j!/(n)_j
};

inline constexpr double kIntegralityTol = 1e-9;

Parameters make_parameters(int n, double nu, double integrality_tol = kIntegralityTol);

// Re-runs the checks of make_parameters on an existing value.
void validate(const Parameters& p, double integrality_tol = kIntegralityTol);

int atom_count(const Parameters& p);
std::vector<SpectrumAtom> discrete_spectrum(const Parameters& p);

// max_j |s_j| − (ν−n)².
double resolvent_abscissa(const Parameters& p);

// Projector constant in the form 2Γ(n+j)(ν−n−2j)Γ(ν−j)/(πⁿΓ(n)j!Γ(ν−n−j+1)).
double projector_constant(const Parameters& p, int j);

// Reproducing constant of the j-th eigenspace from the weighted Bergman
// kernel route: the same expression without the leading 2.
double eigenspace_reproducing_constant(const Parameters& p, int j);

// Pochhammer (a)_k for real a.
double pochhammer(double a, int k);

}  // namespace hyperball
