#pragma once

#include <functional>

#include "hyperball/geometry.hpp"
#include "hyperball/params.hpp"
#include "hyperball/quad.hpp"
#include "hyperball/spectral.hpp"

namespace hyperball {

// value = exp(prefactor_exponent) · radial, prefactor_exponent = −ν log(1−⟨z,w⟩)
// on the principal branch (Re(1−⟨z,w⟩) > 0 on the ball).
struct KernelValue {
    cplx value;
    cplx prefactor_exponent;
    cplx radial;
    QuadDiagnostics diagnostics;
};

// −ν log(1−⟨z,w⟩).
cplx kernel_prefactor_exponent(const Parameters& p, const BallPoint& z, const BallPoint& w);

// Kernels of the form (1−⟨z,w⟩)^{−ν} k(d(z,w)) expose the radial part k(d)
// separately; RadialProfile and the grid sweeps use it.
struct RadialValue {
    cplx value;
    QuadDiagnostics diagnostics;
};

// ---------------------------------------------------------------- spectral density and projectors

// Absolutely continuous part of e^ν(s, z, w); zero for s ≤ 0.
KernelValue spectral_density_continuous(const Parameters& p, double s, const BallPoint& z, const BallPoint& w);

// c_j j!/(n)_j (1−⟨z,w⟩)^{−ν} P_j^{(n−1,−ν)}(cosh 2d).
KernelValue projector_kernel(const Parameters& p, const SpectrumAtom& atom, const BallPoint& z, const BallPoint& w);

// c_j (1−⟨z,w⟩)^{−ν} ₂F₁(−j, j−ν+n; n; 1 − cosh²d), the terminating-series form.
KernelValue projector_kernel_hypergeometric(const Parameters& p, const SpectrumAtom& atom, const BallPoint& z,
                                            const BallPoint& w);

// c_j j!/(n)_j P_j^{(n−1,−ν)}(cosh 2d), without the prefactor.
double projector_radial(const Parameters& p, const SpectrumAtom& atom, double d);

// ---------------------------------------------------------------- functional calculus

// f(Δ̃_ν) described on the spectral side: the continuous multiplier in λ
// (s = λ²) and the values at the atoms s_j.
struct SpectralFunction {
    SpectralMultiplier continuous;
    std::function<cplx(const SpectrumAtom&)> at_atom;
};

// Builds the SpectralFunction of s ↦ f(s) with no tail decomposition, so f must decay.
SpectralFunction spectral_function(std::function<cplx(double)> f);

// Ω_f(w, z) = ∫₀^∞ e^ν(s) f(s) ds + Σ_j f(s_j) K_j(z, w).
KernelValue functional_calculus(const Parameters& p, const SpectralFunction& f, const BallPoint& z,
                                const BallPoint& w, const QuadratureSpec& spec);
KernelValue functional_calculus(const Parameters& p, std::function<cplx(double)> f, const BallPoint& z,
                                const BallPoint& w, const QuadratureSpec& spec);
RadialValue functional_calculus_radial(const Parameters& p, const SpectralFunction& f, double d,
                                       const QuadratureSpec& spec);

// ---------------------------------------------------------------- heat, resolvent, wave

SpectralFunction heat_function(const Parameters& p, double t);
SpectralFunction resolvent_function(const Parameters& p, cplx xi);
SpectralFunction wave_function(const Parameters& p, double t);
// sin(tλ)/λ on the continuum, sinh(t(2j+n−ν))/(2j+n−ν) at the atoms.
SpectralFunction shifted_wave_function(const Parameters& p, double t);

// The λ cutoff is raised to √(kHeatCutoffExponent/t) when that exceeds
// spec.lambda_max, so small t keeps e^{−tλ²} negligible at the cutoff.
inline constexpr double kHeatCutoffExponent = 40.0;

KernelValue heat_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                        const QuadratureSpec& spec = {});
RadialValue heat_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec = {});

// Re ξ must clear the poles −ρ_j and the cut (−∞, −(ν−n)²] by 1e−8; z ≠ w.
KernelValue resolvent_kernel(const Parameters& p, cplx xi, const BallPoint& z, const BallPoint& w,
                             const QuadratureSpec& spec = {});
RadialValue resolvent_radial(const Parameters& p, cplx xi, double d, const QuadratureSpec& spec = {});

struct WaveOptions {
    bool force = false;  // evaluate even when d(z,w) ≥ |t|
};

// Spectral wave kernel with multiplier sin(t√(λ²+(ν−n)²))/√(λ²+(ν−n)²).
// Throws RegimeError when d(z,w) ≥ |t| unless forced.
KernelValue wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                        const QuadratureSpec& spec = {}, WaveOptions opt = {});
RadialValue wave_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec = {});

// Spectral kernel with multiplier sin(tλ)/λ and atom factor sinh(t(2j+n−ν))/(2j+n−ν):
// the Cauchy kernel of Δ_ν + (ν−n)². Same regime rule as wave_kernel.
KernelValue shifted_wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                                const QuadratureSpec& spec = {}, WaveOptions opt = {});
RadialValue shifted_wave_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec = {});

// Closed-form wave kernel, n = 1 only; zero when |t| ≤ d.
KernelValue closed_form_wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w);
double closed_form_wave_radial(const Parameters& p, double t, double d);

// ---------------------------------------------------------------- Green kernel

enum class GreenExponent {
    verbatim,  // ((1−|z|²)(1−|w|²)/|1−⟨z,w⟩|²)^{n − iμ/2}
    halved,    // the same base to the power (n − iμ)/2
};

// C(μ) = Γ((n−iμ+ν)/2) Γ((n−iμ−ν)/2) / (2πⁿ Γ(1−iμ)).
cplx green_constant(const Parameters& p, cplx mu);

// Throws on μ = −i(2ℓ+n±ν) and at z = w.
KernelValue green_kernel(const Parameters& p, cplx mu, const BallPoint& z, const BallPoint& w,
                         GreenExponent exponent = GreenExponent::verbatim);

}  // namespace hyperball
