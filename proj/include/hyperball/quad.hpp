#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperball/common.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/parallel.hpp"
#include "hyperball/params.hpp"

namespace hyperball {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double lambda_max = 60.0;
    int panel_points = 32;
    std::optional<double> oscillation_period;
    int accel_terms = 12;

    void validate() const;
};

struct QuadDiagnostics {
    long nodes = 0;
    double tail_estimate = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    std::string message;  // first failure reason, empty when converged

    void merge(const QuadDiagnostics& other);
    void fail(const std::string& why);
};

struct QuadResult {
    cplx value;
    QuadDiagnostics diag;
};

using LineFunction = std::function<cplx(double)>;

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss–Legendre on [−1, 1], cached per order.
const GaussRule& gauss_legendre(int points);

// Gauss–Jacobi for ∫₀¹ (1−u)^a u^b g(u) du (Golub–Welsch).
GaussRule gauss_jacobi_unit(int points, double a, double b);

// ∫_a^b f with one Gauss–Legendre panel.
cplx gl_panel(const LineFunction& f, double a, double b, int points);

// Fixed composite Gauss–Legendre on [a, b], panels no wider than max_width.
// Non-adaptive, so the rounding pattern is a smooth function of the integrand's parameters.
QuadResult integrate_panels(const LineFunction& f, double a, double b, double max_width, int points);

// ∫₀^∞ f.
//   no oscillation_period: adaptive bisection on [0, lambda_max]; a tail probe on
//     [lambda_max, 2 lambda_max] flags integrands that are not negligible there.
//   oscillation_period P: half-period panels, adaptive on [0, lambda_max] and
//     Euler-averaged partial sums beyond it.
// λ = 0 is never sampled.
QuadResult integrate_halfline(const LineFunction& f, const QuadratureSpec& spec);

// ∫_a^∞ e^{iωλ} g(λ) dλ for smooth, slowly varying g. Half-period panels and
// accel_terms rounds of averaging of the partial sums; |ω| below 1e−12
// switches to the algebraic map λ = a·e^s, which needs g = o(1/λ).
QuadResult integrate_oscillatory_tail(const LineFunction& g, double omega, double a, const QuadratureSpec& spec);

struct BallGrid {
    int radial = 64;
    int angular = 128;  // per circle factor; n = 2 uses angular/2 on each Hopf circle and in the latitude
    // The radial rule absorbs (1−u)^{ν−n−1−weight_shift}; the integrand is
    // multiplied back by (1−u)^{weight_shift}. Use it for integrands with a
    // (1−u)^{−weight_shift} boundary blow-up.
    double weight_shift = 0.0;
};

using SphereFunction = std::function<cplx(const CVec&)>;

// ∫_B f dμ_ν, dμ_ν = (1−|z|²)^{ν−n−1} dm(z); n ∈ {1, 2}. The parallel mode
// splits the radial rings across threads and sums them in a fixed order, so
// both modes give the same bits; f must then be safe to call concurrently.
cplx integrate_ball(const Parameters& p, const BallField& f, const BallGrid& grid = {},
                    Execution mode = Execution::serial);

// ∫_B g(|z|) dμ_ν for radial integrands, any n: the radial rule alone.
cplx integrate_ball_radial(const Parameters& p, const std::function<cplx(double)>& g, int points = 128,
                           double weight_shift = 0.0);

// The same integral in the coordinates w = g_c·v, so the rule is refined near c.
// Uses dμ_ν(g_c v) = (1−|c|²)^{ν} |1+⟨v,c⟩|^{−2ν} dμ_ν(v) for the transvection g_c.
cplx integrate_ball_centered(const Parameters& p, const BallField& f, const BallPoint& c, const BallGrid& grid = {},
                             Execution mode = Execution::serial);

// Mean over S^{2n−1} for the rotation-invariant probability measure; n ∈ {1, 2}.
cplx integrate_sphere(int n, const SphereFunction& f, int angular = 128);

// Nodes and weights of the sphere rule (weights sum to 1).
struct SphereRule {
    std::vector<CVec> points;
    std::vector<double> weights;
};
SphereRule sphere_rule(int n, int angular = 128);

}  // namespace hyperball
