#pragma once

#include "hyperball/common.hpp"
#include "hyperball/params.hpp"

namespace hyperball {

// Principal branch of log Γ(z): real part ln|Γ(z)|, imaginary part in (−π, π].
// Throws PoleError within 1e−12 of a non-positive integer.
cplx log_gamma(cplx z);

struct HypergeometricArgs {
    cplx a, b, c;
    double x = 0.0;
};

struct SeriesResult {
    cplx value;
    long terms = 0;
    bool converged = true;
};

inline constexpr long kSeriesTermCap = 1'000'000;
inline constexpr double kSeriesRelTol = 1e-15;

// ₂F₁(a,b;c;x) for real x < 1.
//   x < −1     1/x connection formula when a−b is not an integer
//   x ≤ 0      otherwise Pfaff transform to x/(x−1) ∈ [0,1), preferring a terminating numerator
//   0 < x < 1  Maclaurin series
// A cap hit returns the partial sum with converged = false.
SeriesResult gauss_2f1(const HypergeometricArgs& args);

// gauss_2f1 that throws std::runtime_error when the series does not converge.
cplx hyp2f1(cplx a, cplx b, cplx c, double x);

// P_j^{(α,β)}(y) from the terminating hypergeometric sum.
double jacobi_polynomial(int j, double alpha, double beta, double y);

// Jacobi function φ_λ^{(α,β)}(t) = ₂F₁((ρ+iλ)/2, (ρ−iλ)/2; α+1; −sinh²t), ρ = α+β+1.
// Real λ with λ·tanh t above kJacobiAsymptoticSwitch goes through the
// Harish-Chandra expansion, where the Maclaurin route loses e^{λ tanh t} digits.
cplx jacobi_function(cplx lambda, double alpha, double beta, double t);

inline constexpr double kJacobiAsymptoticSwitch = 5.0;

// c(λ) = 2^{ρ−iλ} Γ(α+1) Γ(iλ) / (Γ((iλ+ρ)/2) Γ((iλ+α−β+1)/2)).
cplx jacobi_c(cplx lambda, double alpha, double beta);

// Σ_k Γ_k e^{−2kt}, the expansion of Φ_λ(t) = e^{(iλ−ρ)t} Σ_k Γ_k e^{−2kt}.
// Requires real λ ≠ 0 and t > 0.
SeriesResult jacobi_hc_series(double lambda, double alpha, double beta, double t);

// a(λ,t) with |c(λ)|⁻² φ_λ(t) = 2 Re(e^{iλt} a(λ,t)) for real λ > 0.
// The amplitude is slowly varying in λ; oscillatory tails integrate it against e^{±iλt}.
cplx jacobi_outgoing_amplitude(double lambda, double alpha, double beta, double t);

// C_ν(λ), the (α,β) = (n−1, −ν) case of jacobi_c.
cplx harish_chandra_c(const Parameters& p, double lambda);

// |C_ν(λ)|⁻², zero at λ = 0.
double plancherel_weight(const Parameters& p, double lambda);

bool is_nonpositive_integer(cplx z, double tol = 1e-12);

}  // namespace hyperball
