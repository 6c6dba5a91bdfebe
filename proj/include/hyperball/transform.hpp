#pragma once

#include <iosfwd>
#include <vector>

#include "hyperball/geometry.hpp"
#include "hyperball/quad.hpp"

namespace hyperball {

// P^ν_λ(z,ω) = ((1−|z|²)/|1−⟨z,ω⟩|²)^{(iλ+n−ν)/2} (1−⟨z,ω⟩)^{−ν}.
cplx poisson_kernel(const Parameters& p, cplx lambda, const BallPoint& z, const BoundaryPoint& omega);

// Φ_λ(z) = (1−|z|²)^{(−ν+n−iλ)/2} ₂F₁((−iλ+n+ν)/2, (−iλ+n−ν)/2; n; |z|²).
cplx spherical_function(const Parameters& p, cplx lambda, const BallPoint& z);

// (1−⟨z,w⟩)^{−ν} ₂F₁((iλ+n−ν)/2, (−iλ+n−ν)/2; n; −sinh²d(z,w)).
cplx spherical_kernel(const Parameters& p, double lambda, const BallPoint& z, const BallPoint& w);

// ∫ P_λ(z,ω) conj(P_λ(w,ω)) dσ(ω) on the sphere rule; n ∈ {1, 2}.
cplx spherical_kernel_quadrature(const Parameters& p, double lambda, const BallPoint& z, const BallPoint& w,
                                 int angular = 256);

struct HelgasonSample {
    double lambda = 0.0;
    BoundaryPoint omega = BoundaryPoint::scalar(1.0);
    cplx value;
};

struct ForwardOptions {
    BallGrid grid;
    // F must vanish on quadrature nodes with |z| > support_radius.
    double support_radius = 0.9;
};

// F̃(λ,ω) = ∫ F(z) P^ν_{−λ}(z,ω) dμ_ν(z); n ∈ {1, 2}. Complex λ is allowed
// (the atoms λ_j = −i(ν−n−2j)).
cplx fh_forward(const Parameters& p, const BallField& F, cplx lambda, const BoundaryPoint& omega,
                const ForwardOptions& opt = {});

struct HelgasonGridSpec {
    double lambda_max = 40.0;
    int panels = 20;
    int panel_points = 16;
    int angular = 64;  // sphere rule for ω
    // F radial: F̃(λ,ω) does not depend on ω, one forward transform per λ.
    bool radial = false;
};

// F̃ sampled for the inversion formula: ±λ on Gauss–Legendre panels of
// [0, lambda_max], each ω of the sphere rule, and the atoms.
struct HelgasonGrid {
    HelgasonGridSpec spec;
    std::vector<double> lambda, lambda_weight;
    SphereRule sphere;
    std::vector<cplx> plus, minus;  // [k·M + m] at (±λ_k, ω_m)
    std::vector<cplx> atoms;        // [j·M + m] at (λ_j, ω_m)

    std::size_t omega_count() const { return sphere.points.size(); }
    // The real-λ samples (both signs) as HelgasonSample rows.
    std::vector<HelgasonSample> samples() const;
};

HelgasonGrid helgason_grid(const Parameters& p, const BallField& F, const HelgasonGridSpec& spec,
                           const ForwardOptions& opt = {});

// Zeroes everywhere: the inversion of the zero field.
HelgasonGrid zero_helgason_grid(const Parameters& p, const HelgasonGridSpec& spec);

// Right side of the inversion formula at z with the printed constants:
// (1/4)·Γ(n)/(2^{2(ν−n)}π^{n+1}) ∫_ℝ∫ F̃ P_λ |C_ν|⁻² dλ dσ + Σ_j c_j ∫ F̃(λ_j,ω) P_{λ_j}(z,ω) dσ.
// The λ-integral is symmetrized onto [0, λ_max]. Flags a grid whose node
// spacing exceeds π/(4·(1 + d(0,z))) or whose weighted samples at λ_max exceed 1e−3
// of their peak.
QuadResult fh_inverse(const Parameters& p, const HelgasonGrid& grid, const BallPoint& z);

// lambda, omega re/im pairs, value_re, value_im; 17 significant digits.
void write_helgason_csv(std::ostream& os, const std::vector<HelgasonSample>& samples);

}  // namespace hyperball
