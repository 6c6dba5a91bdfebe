#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperball/geometry.hpp"
#include "hyperball/params.hpp"
#include "hyperball/quad.hpp"
#include "hyperball/report.hpp"

namespace hyperball {

// Every pass/fail threshold of the harness, and the finite-difference steps.
struct Tolerances {
    double gamma_identity = 1e-12;
    double hyp2f1_oracle = 1e-10;
    double lemma31 = 1e-8;
    double eigenfunction = 1e-5;
    double intertwining = 1e-6;
    double heat_pde = 1e-4;
    double heat_long_time = 1e-6;
    double heat_laplace = 1e-6;
    double wave_pde = 1e-3;
    double wave_symmetry = 1e-8;
    double wave_equality_cv = 1e-3;
    double prop61_cv = 1e-2;
    double prop62_cv = 1e-3;
    double prop62_tail = 1e-8;
    double green_resolvent_cv = 1e-3;
    double projector_cross = 1e-6;
    double projector_kappa = 1e-2;
    double projector_constant = 1e-12;
    double semigroup_kappa = 1e-2;
    double inversion_l2 = 1e-2;
    double inversion_radial = 1e-6;
    double resolvent_identity_cv = 1e-3;
    double kappa_agreement = 1e-2;
    // delta pairing: relative weight of the last λ stretch, well below kappa_agreement
    double delta_pairing_stability = 1e-4;

    double fd_step = 1e-3;         // spatial central differences, Richardson-combined
    double heat_time_step = 1e-3;  // ∂_t, Richardson-combined
    double wave_time_step = 1e-2;  // ∂²_t, Richardson-combined
    // FD checks tighten the quadrature tolerance so evaluation noise stays
    // below the difference quotients' resolution.
    double fd_quadrature_rel_tol = 1e-12;
};

const Tolerances& tolerances();

struct CheckRequest {
    std::optional<Parameters> params;  // unset: each check's own default
    QuadratureSpec spec;
    std::uint64_t seed = 7;
    std::optional<double> t;
    std::optional<double> x;
    std::optional<cplx> mu;
    std::optional<cplx> xi;
};

VerificationReport check_special_functions(const CheckRequest& rq);
VerificationReport check_lemma31(const CheckRequest& rq);
VerificationReport check_eigenfunctions(const CheckRequest& rq);
VerificationReport check_intertwining(const CheckRequest& rq);
VerificationReport check_heat_pde(const CheckRequest& rq);
VerificationReport check_wave_pde(const CheckRequest& rq);
VerificationReport check_projectors(const CheckRequest& rq);
VerificationReport check_semigroup(const CheckRequest& rq);
VerificationReport check_delta_pairing(const CheckRequest& rq);
VerificationReport check_inversion(const CheckRequest& rq);
VerificationReport check_resolvent_identity(const CheckRequest& rq);

// Ratio-mode checks over explicit sample sets.
VerificationReport check_prop61(const Parameters& p, const std::vector<std::pair<double, double>>& tx,
                                const QuadratureSpec& spec);
VerificationReport check_prop62(const Parameters& p, cplx mu, const std::vector<double>& xs,
                                const QuadratureSpec& spec);
struct PointPair {
    BallPoint z, w;
};
struct WaveSample {
    double t;
    BallPoint z, w;
};
VerificationReport check_wave_equality(const Parameters& p, const std::vector<WaveSample>& samples,
                                       const QuadratureSpec& spec);
VerificationReport check_green_resolvent(const Parameters& p, cplx mu, const std::vector<PointPair>& samples,
                                         const QuadratureSpec& spec);

// Request forms: default sample sets, or the single point given by t/x/mu.
VerificationReport check_prop61(const CheckRequest& rq);
VerificationReport check_prop62(const CheckRequest& rq);
VerificationReport check_wave_equality(const CheckRequest& rq);
VerificationReport check_green_resolvent(const CheckRequest& rq);

// ξ(μ) = 2nν − (μ² + ν² + n²).
cplx green_xi(const Parameters& p, cplx mu);

// Fitted normalizations from the semigroup, projector, inversion, and
// delta-pairing reports (their `ratio` fields) and whether they agree.
VerificationReport constant_audit(const std::vector<VerificationReport>& sources, std::uint64_t seed);
VerificationReport check_constant_audit(const CheckRequest& rq);

const std::vector<std::string>& check_names();
// Throws std::invalid_argument for an unknown name.
VerificationReport run_check(const std::string& name, const CheckRequest& rq);
// Every check in check_names() order; the audit reuses the source reports.
std::vector<VerificationReport> run_all(const CheckRequest& rq);

}  // namespace hyperball
