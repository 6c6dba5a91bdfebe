#pragma once

#include <vector>

#include "hyperball/quad.hpp"

namespace hyperball {

// m(λ) ≈ Σ_k e^{iω_k λ} M_k(λ) for λ ≥ lambda_max, each M_k smooth and slowly varying.
struct TailTerm {
    double omega = 0.0;
    LineFunction amplitude;
};

struct SpectralMultiplier {
    LineFunction value;
    // Empty: the integrand is negligible beyond lambda_max (checked, flagged otherwise).
    std::vector<TailTerm> tail;
    // Largest oscillation frequency of m on the body; sets the panel width.
    double frequency = 0.0;
};

// ∫₀^∞ m(λ) |C_ν(λ)|⁻² φ_λ^{(n−1,−ν)}(d) dλ.
// The body [0, lambda_max] uses fixed Gauss–Legendre panels, so the result is
// smooth in (d, multiplier parameters) for finite-difference checks. The tail
// splits |C|⁻²φ_λ(d) = e^{iλd}a(λ) + e^{−iλd}ā(λ) and sums each frequency
// ω_k ± d on the half-period path.
QuadResult continuous_spectral_integral(const Parameters& p, const SpectralMultiplier& m, double d,
                                        const QuadratureSpec& spec);

// Γ(n) / (2π^{n+1} 2^{2(ν−n)}), the continuous-part coefficient shared by the heat,
// resolvent, and wave kernels (twice the spectral-density coefficient).
double continuous_coefficient(const Parameters& p);

// Below this distance the kernel is evaluated at d = 0.
inline constexpr double kCoincidentDistance = 1e-9;

}  // namespace hyperball
