#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperball/format.hpp"
#include "hyperball/kernels.hpp"
#include "hyperball/profile.hpp"
#include "hyperball/specfun.hpp"
#include "hyperball/transform.hpp"
#include "hyperball/verify.hpp"

namespace hyperball {

namespace {

using json = nlohmann::ordered_json;

json spec_json(const QuadratureSpec& s) {
    json j;
    j["rel_tol"] = s.rel_tol;
    j["abs_tol"] = s.abs_tol;
    j["lambda_max"] = s.lambda_max;
    j["panel_points"] = s.panel_points;
    j["accel_terms"] = s.accel_terms;
    return j;
}

VerificationReport start(const std::string& name, const Parameters& p, const QuadratureSpec& spec,
                         std::uint64_t seed) {
    VerificationReport r;
    r.check = name;
    r.params["n"] = p.n;
    r.params["nu"] = p.nu;
    r.params["spec"] = spec_json(spec);
    r.lambda_max = spec.lambda_max;
    r.seed = seed;
    return r;
}

Parameters params_or(const CheckRequest& rq, int n, double nu) {
    return rq.params ? *rq.params : make_parameters(n, nu);
}

QuadratureSpec fd_spec(const QuadratureSpec& s) {
    QuadratureSpec out = s;
    out.rel_tol = std::min(s.rel_tol, tolerances().fd_quadrature_rel_tol);
    return out;
}

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double v) { return format_g17(v); }
std::string fmt(cplx z) { return format_g17(z.real()) + (z.imag() < 0 ? "" : "+") + format_g17(z.imag()) + "i"; }

BoundaryPoint random_boundary_point(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(n);
    for (int k = 0; k < n; ++k) v(k) = cplx(g(rng), g(rng));
    return BoundaryPoint(v / v.norm());
}

double distance(const BallPoint& z, const BallPoint& w) { return std::asinh(std::sqrt(bergman_sinh2(z, w))); }

// (z, w) with d(z,w) in [dmin, dmax].
PointPair random_pair(int n, std::mt19937_64& rng, double radius, double dmin, double dmax) {
    for (int tries = 0; tries < 10000; ++tries) {
        BallPoint z = random_ball_point(n, rng, radius);
        BallPoint w = random_ball_point(n, rng, radius);
        const double d = distance(z, w);
        if (d >= dmin && d <= dmax) return {z, w};
    }
    throw DomainError("random_pair: no pair in the requested distance window");
}

double log_gamma_ratio(double a, double b) { return gsl_sf_lngamma(a) - gsl_sf_lngamma(b); }

void merge_diag(VerificationReport& r, const QuadDiagnostics& d) {
    const bool was = r.quadrature_diag.converged;
    r.quadrature_diag.merge(d);
    if (was && !d.converged) r.note("quadrature flag: " + d.message);
}

}  // namespace

// ---------------------------------------------------------------- special functions

VerificationReport check_special_functions(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("special_functions", p, rq.spec, rq.seed);
    const Tolerances& tol = tolerances();

    double worst_gamma = 0.0;
    const int grid = 300;
    for (int i = 0; i < grid; ++i) {
        const double l = 0.1 + (30.0 - 0.1) * i / (grid - 1);
        const double v = std::exp(2.0 * log_gamma(cplx(0.0, l)).real()) * l * std::sinh(pi * l) / pi;
        worst_gamma = std::max(worst_gamma, std::abs(v - 1.0));
    }

    const std::string path = fixture_directory() + "/specfun_oracle.csv";
    const std::vector<CsvRow> rows = read_csv(path);
    double worst_f = 0.0;
    for (const CsvRow& row : rows) {
        auto c = [&](const char* re, const char* im) {
            return cplx(parse_double(row.at(re)), parse_double(row.at(im)));
        };
        const HypergeometricArgs args{c("a_re", "a_im"), c("b_re", "b_im"), c("c_re", "c_im"),
                                      parse_double(row.at("x"))};
        const cplx ref = c("f_re", "f_im");
        const cplx got = gauss_2f1(args).value;
        const double e = std::abs(got - ref) / std::max(std::abs(ref), 1e-300);
        if (e >= worst_f) {
            worst_f = e;
            r.lhs = got;
            r.rhs = ref;
        }
    }
    r.params["gamma_grid"] = "300 points on [0.1, 30]";
    r.params["oracle_cases"] = rows.size();
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = std::max(worst_gamma, worst_f);
    r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : cplx(1.0);
    r.note("max |Gamma(i l)|^2 l sinh(pi l)/pi - 1 = " + fmt(worst_gamma));
    r.note("max 2F1 relative error vs oracle = " + fmt(worst_f) + " over " + std::to_string(rows.size()) +
           " cases; lhs/rhs show the worst case");
    r.passed = worst_gamma < tol.gamma_identity && worst_f < tol.hyp2f1_oracle && rows.size() == 200;
    if (rows.size() != 200) r.note("expected 200 oracle cases");
    return r;
}

// ---------------------------------------------------------------- spherical kernel

VerificationReport check_lemma31(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("lemma31", p, rq.spec, rq.seed);
    std::mt19937_64 rng(rq.seed);
    std::uniform_real_distribution<double> ul(0.0, 6.0);
    const int angular = p.n == 1 ? 256 : 64;
    double worst = 0.0;
    std::vector<cplx> ratios;
    for (int i = 0; i < 20; ++i) {
        const double l = ul(rng);
        const BallPoint z = random_ball_point(p.n, rng, 0.8);
        const BallPoint w = random_ball_point(p.n, rng, 0.8);
        const cplx quad = spherical_kernel_quadrature(p, l, z, w, angular);
        const cplx closed = spherical_kernel(p, l, z, w);
        const double e = rel_diff(quad, closed);
        ratios.push_back(quad / closed);
        if (i == 0) {
            r.lhs = quad;
            r.rhs = closed;
            r.abs_err = std::abs(quad - closed);
        }
        worst = std::max(worst, e);
    }
    const RatioStats st = ratio_stats(ratios);
    r.params["samples"] = 20;
    r.params["angular"] = angular;
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.rel_err = worst;
    r.note("lhs: sphere quadrature of P_l(z,.) conj P_l(w,.); rhs: closed form; rel_err is the max over samples");
    r.passed = worst < tolerances().lemma31;
    return r;
}

// ---------------------------------------------------------------- eigenfunctions and intertwining

VerificationReport check_eigenfunctions(const CheckRequest& rq) {
    const Parameters base = params_or(rq, 1, 2.5);
    const double gap = base.gap();
    VerificationReport r = start("eigenfunctions", base, rq.spec, rq.seed);
    const Tolerances& tol = tolerances();
    std::mt19937_64 rng(rq.seed);
    std::uniform_real_distribution<double> ul(0.0, 4.0);
    double worst = 0.0;
    bool first = true;
    for (int n : {1, 2}) {
        const Parameters p = make_parameters(n, n + gap);
        for (int i = 0; i < 5; ++i) {
            const double l = ul(rng);
            const BallPoint z = random_ball_point(n, rng, 0.7);
            const BoundaryPoint om = random_boundary_point(n, rng);
            const BallField f = [&](const CVec& v) { return poisson_kernel(p, l, BallPoint(v), om); };
            const cplx lap = apply_delta_nu(p, f, z, {tol.fd_step, true});
            const cplx expect = -(l * l + gap * gap) * poisson_kernel(p, l, z, om);
            const double e = rel_diff(lap, expect);
            worst = std::max(worst, e);
            if (first) {
                r.lhs = lap;
                r.rhs = expect;
                r.abs_err = std::abs(lap - expect);
                r.ratio = lap / expect;
                first = false;
            }
        }
    }
    r.params["n_values"] = json::array({1, 2});
    r.params["samples"] = 10;
    r.rel_err = worst;
    r.note("FD Delta_nu P_l vs -(l^2+(n-nu)^2) P_l, nu = n + " + fmt(gap) + "; rel_err is the max over samples");
    r.passed = worst < tol.eigenfunction;
    return r;
}

VerificationReport check_intertwining(const CheckRequest& rq) {
    const Parameters base = params_or(rq, 1, 2.5);
    const double gap = base.gap();
    VerificationReport r = start("intertwining", base, rq.spec, rq.seed);
    const Tolerances& tol = tolerances();
    std::mt19937_64 rng(rq.seed);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);
    double worst = 0.0, worst_nu = 0.0;
    bool first = true;
    for (int n : {1, 2}) {
        const Parameters p = make_parameters(n, n + gap);
        const double nu = p.nu;
        const double gamma = -nu / 2.0;
        const GeneralizedLaplacianParams ab{0.0, -nu, n};
        const GeneralizedLaplacianParams shifted{ab.alpha - gamma, ab.beta - gamma, n};
        const double shift = 4.0 * gamma * (ab.alpha + ab.beta + n - gamma);
        for (int i = 0; i < 5; ++i) {
            CVec a(n), b(n);
            for (int k = 0; k < n; ++k) {
                a(k) = cplx(uc(rng), uc(rng));
                b(k) = cplx(uc(rng), uc(rng));
            }
            const double c = uc(rng);
            const BallField f = [=](const CVec& v) { return std::exp(a.dot(v) + b.dot(v.conjugate()) + c * v.squaredNorm()); };
            // M F = (1−|z|²)^{−γ} F
            const BallField mf = [=](const CVec& v) { return std::pow(1.0 - v.squaredNorm(), -gamma) * f(v); };
            const BallPoint z = random_ball_point(n, rng, 0.7);
            const FdOptions fd{tol.fd_step, true};
            const cplx lhs = apply_delta_alpha_beta(ab, f, z, fd);
            const cplx rhs = (apply_delta_alpha_beta(shifted, mf, z, fd) - shift * mf(z.z())) / mf(z.z()) * f(z.z());
            const double e = rel_diff(lhs, rhs);
            worst = std::max(worst, e);
            worst_nu = std::max(worst_nu, rel_diff(apply_delta_nu(p, f, z, fd), lhs));
            if (first) {
                r.lhs = lhs;
                r.rhs = rhs;
                r.abs_err = std::abs(lhs - rhs);
                r.ratio = lhs / rhs;
                first = false;
            }
        }
    }
    r.params["alpha"] = 0.0;
    r.params["beta"] = "-nu";
    r.params["gamma"] = "-nu/2";
    r.params["n_values"] = json::array({1, 2});
    r.params["samples"] = 10;
    r.rel_err = worst;
    r.note("Delta_{0,-nu} F vs M^-1 [Delta_{nu/2,-nu/2} + 2 nu (n - nu/2)] M F on exp-polynomial fields");
    r.note("Delta_{0,-nu} vs Delta_nu max rel difference " + fmt(worst_nu));
    r.passed = worst < tol.intertwining;
    return r;
}

// ---------------------------------------------------------------- heat

VerificationReport check_heat_pde(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    const QuadratureSpec spec = fd_spec(rq.spec);
    VerificationReport r = start("heat_pde", p, spec, rq.seed);
    const Tolerances& tol = tolerances();
    std::mt19937_64 rng(rq.seed);

    // ∂_t K = Δ_ν K in z
    struct Row {
        double t;
        PointPair zw;
    };
    std::vector<Row> rows;
    for (double t : {0.1, 0.5, 1.0})
        for (int i = 0; i < 5; ++i) rows.push_back({t, random_pair(p.n, rng, 0.6, 0.05, 2.0)});
    struct Res {
        cplx dt, lap, k;
        QuadDiagnostics diag;
    };
    const std::vector<Res> res = map_indices<Res>(
        rows.size(),
        [&](std::size_t i) {
            const Row& row = rows[i];
            Res out;
            const double h = tol.heat_time_step;
            auto K = [&](double t, const CVec& z) {
                const KernelValue kv = heat_kernel(p, t, BallPoint(z), row.zw.w, spec);
                out.diag.merge(kv.diagnostics);
                return kv.value;
            };
            out.k = K(row.t, row.zw.z.z());
            auto d1 = [&](double hh) { return (K(row.t + hh, row.zw.z.z()) - K(row.t - hh, row.zw.z.z())) / (2.0 * hh); };
            out.dt = (4.0 * d1(h / 2.0) - d1(h)) / 3.0;
            out.lap = apply_delta_nu(p, [&](const CVec& z) { return K(row.t, z); }, row.zw.z, {tol.fd_step, true});
            return out;
        },
        Execution::parallel);
    double kmax = 0.0;
    for (const Res& x : res) kmax = std::max(kmax, std::abs(x.k));
    const double eps = 1e-12 * kmax;
    double worst_pde = 0.0;
    for (const Res& x : res) {
        worst_pde = std::max(worst_pde, std::abs(x.dt - x.lap) / (std::abs(x.k) + eps));
        merge_diag(r, x.diag);
    }

    // t → ∞: only the j = 0 atom survives
    const PointPair lt = random_pair(p.n, rng, 0.6, 0.05, 2.0);
    const KernelValue k50 = heat_kernel(p, 50.0, lt.z, lt.w, spec);
    const SpectrumAtom a0 = discrete_spectrum(p).front();
    const cplx limit = a0.tau * std::exp(kernel_prefactor_exponent(p, lt.z, lt.w));
    const double long_err = rel_diff(k50.value, limit);
    merge_diag(r, k50.diagnostics);

    // Laplace transform in t against the resolvent
    const cplx xi = rq.xi.value_or(2.0);
    const PointPair lp = random_pair(p.n, rng, 0.6, 0.5, 1.5);
    const double s0 = std::log(1e-4), s1 = std::log(60.0);
    const GaussRule& gl = gauss_legendre(20);
    const int panels = static_cast<int>(std::ceil(s1 - s0));
    const double hs = (s1 - s0) / panels;
    std::vector<double> nodes, weights;
    for (int k = 0; k < panels; ++k)
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            nodes.push_back(s0 + hs * (k + 0.5 * (gl.nodes[i] + 1.0)));
            weights.push_back(0.5 * hs * gl.weights[i]);
        }
    const std::vector<KernelValue> hv = map_indices<KernelValue>(
        nodes.size(), [&](std::size_t i) { return heat_kernel(p, std::exp(nodes[i]), lp.z, lp.w, spec); },
        Execution::parallel);
    cplx laplace = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = std::exp(nodes[i]);
        laplace += weights[i] * t * std::exp(-xi * t) * hv[i].value;
        merge_diag(r, hv[i].diagnostics);
    }
    const KernelValue rv = resolvent_kernel(p, xi, lp.z, lp.w, spec);
    merge_diag(r, rv.diagnostics);

    r.params["t_values"] = json::array({0.1, 0.5, 1.0});
    r.params["pde_samples"] = rows.size();
    r.params["xi"] = json{{"re", xi.real()}, {"im", xi.imag()}};
    r.lhs = laplace;
    r.rhs = rv.value;
    r.ratio = laplace / rv.value;
    r.abs_err = std::abs(laplace - rv.value);
    r.rel_err = rel_diff(laplace, rv.value);
    r.note("lhs: int_0^inf e^{-xi t} K(t) dt; rhs: resolvent kernel");
    r.note("max PDE residual |d_t K - Delta_nu K|/(|K|+eps) = " + fmt(worst_pde));
    r.note("t = 50 vs tau_0 (1-<z,w>)^-nu rel err = " + fmt(long_err));
    r.passed = worst_pde < tol.heat_pde && long_err < tol.heat_long_time && r.rel_err < tol.heat_laplace &&
               r.quadrature_diag.converged;
    return r;
}

// ---------------------------------------------------------------- wave

VerificationReport check_wave_pde(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    const QuadratureSpec spec = fd_spec(rq.spec);
    VerificationReport r = start("wave_pde", p, spec, rq.seed);
    const Tolerances& tol = tolerances();
    std::mt19937_64 rng(rq.seed);
    struct Row {
        double t;
        PointPair zw;
    };
    std::vector<Row> rows;
    for (double t : {1.0, 1.6})
        for (int i = 0; i < 3; ++i) rows.push_back({t, random_pair(p.n, rng, 0.5, 0.05, t - 0.3)});
    struct Res {
        cplx tt, lap, w, odd;
        QuadDiagnostics diag;
    };
    const std::vector<Res> res = map_indices<Res>(
        rows.size(),
        [&](std::size_t i) {
            const Row& row = rows[i];
            Res out;
            auto W = [&](double t, const CVec& z) {
                const KernelValue kv = wave_kernel(p, t, BallPoint(z), row.zw.w, spec);
                out.diag.merge(kv.diagnostics);
                return kv.value;
            };
            const CVec& z = row.zw.z.z();
            const double h = tol.wave_time_step;
            out.w = W(row.t, z);
            auto d2 = [&](double hh) { return (W(row.t + hh, z) - 2.0 * out.w + W(row.t - hh, z)) / (hh * hh); };
            out.tt = (4.0 * d2(h / 2.0) - d2(h)) / 3.0;
            out.lap = apply_delta_nu(p, [&](const CVec& v) { return W(row.t, v); }, row.zw.z, {tol.fd_step, true});
            out.odd = W(-row.t, z) + out.w;
            return out;
        },
        Execution::parallel);
    double worst = 0.0, worst_odd = 0.0;
    for (const Res& x : res) {
        const double scale = std::max({std::abs(x.tt), std::abs(x.lap), std::abs(x.w)});
        worst = std::max(worst, std::abs(x.tt - x.lap) / scale);
        worst_odd = std::max(worst_odd, std::abs(x.odd) / std::abs(x.w));
        merge_diag(r, x.diag);
    }
    const PointPair& zw0 = rows.front().zw;
    const cplx w0 = wave_kernel(p, 0.0, zw0.z, zw0.w, spec).value;
    r.params["t_values"] = json::array({1.0, 1.6});
    r.params["samples"] = rows.size();
    r.params["margin"] = "d(z,w) < |t| - 0.3";
    r.lhs = res.front().tt;
    r.rhs = res.front().lap;
    r.ratio = r.lhs / r.rhs;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = worst;
    r.note("lhs: d_t^2 W; rhs: Delta_nu W (first sample); rel_err is the max residual over samples");
    r.note("W(0) = " + fmt(w0) + ", max |W(-t)+W(t)|/|W(t)| = " + fmt(worst_odd));
    r.passed = worst < tol.wave_pde && w0 == 0.0 && worst_odd < tol.wave_symmetry && r.quadrature_diag.converged;
    return r;
}

VerificationReport check_wave_equality(const Parameters& p, const std::vector<WaveSample>& samples,
                                       const QuadratureSpec& spec) {
    if (p.n != 1) throw DomainError("wave_equality: the closed form is pointwise only for n = 1");
    if (samples.empty()) throw DomainError("wave_equality: no samples");
    VerificationReport r = start("wave_equality", p, spec, 0);
    std::vector<cplx> ratios;
    json js = json::array();
    for (const WaveSample& s : samples) {
        const KernelValue spectral = shifted_wave_kernel(p, s.t, s.z, s.w, spec);
        const KernelValue closed = closed_form_wave_kernel(p, s.t, s.z, s.w);
        merge_diag(r, spectral.diagnostics);
        ratios.push_back(spectral.value / closed.value);
        if (ratios.size() == 1) {
            r.lhs = spectral.value;
            r.rhs = closed.value;
        }
        js.push_back(json{{"t", s.t}, {"d", distance(s.z, s.w)}});
    }
    const RatioStats st = ratio_stats(ratios);
    r.params["samples"] = js;
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = rel_diff(r.lhs, r.rhs);
    r.note("lhs: spectral kernel (sin(t l)/l, sinh atoms); rhs: closed form");
    r.note("fitted ratio " + fmt(st.mean) + " (2/sqrt(pi) = " + fmt(2.0 / std::sqrt(pi)) +
           "); expected 1.0, a constant offset is a constants erratum, not a failure");
    r.passed = st.cv < tolerances().wave_equality_cv && samples.size() >= 2 && r.quadrature_diag.converged;
    if (samples.size() < 2) r.note("ratio-constancy needs at least 2 samples");
    return r;
}

VerificationReport check_wave_equality(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    std::mt19937_64 rng(rq.seed);
    std::uniform_real_distribution<double> ut(1.0, 2.5);
    std::vector<WaveSample> samples;
    for (int i = 0; i < 3; ++i) {
        const double t = ut(rng);
        const PointPair zw = random_pair(p.n, rng, 0.5, 0.05, t - 0.1);
        samples.push_back({t, zw.z, zw.w});
    }
    VerificationReport r = check_wave_equality(p, samples, rq.spec);
    r.seed = rq.seed;
    return r;
}

// ---------------------------------------------------------------- integral formulas

namespace {

// |Γ((iλ+n−ν)/2)Γ((iλ+n+ν)/2)/Γ(iλ)|² = 2^{2(n−ν)} Γ(n)² |C_ν(λ)|⁻²
double gamma_square_factor(const Parameters& p) {
    const double g = std::tgamma(double(p.n));
    return std::pow(2.0, 2.0 * (p.n - p.nu)) * g * g;
}

// Σ_j (ν−n−2j)Γ(ν−j)/Γ(ν−n−j+1) P_j^{(n−1,−ν)}(2x+1) · g(j)
template <class G>
cplx atom_sum(const Parameters& p, double x, G g) {
    cplx s = 0.0;
    for (const SpectrumAtom& a : discrete_spectrum(p)) {
        const int j = a.j;
        const double coef = (p.nu - p.n - 2.0 * j) * std::exp(log_gamma_ratio(p.nu - j, p.nu - p.n - j + 1.0));
        s += coef * jacobi_polynomial(j, p.n - 1.0, -p.nu, 2.0 * x + 1.0) * g(a);
    }
    return s;
}

struct VariantStats {
    std::string label;
    std::vector<cplx> ratios;
    RatioStats st;
};

std::string variant_summary(const std::vector<VariantStats>& vs) {
    std::string s;
    for (const VariantStats& v : vs) {
        if (!s.empty()) s += "; ";
        s += "variant " + v.label + ": ratio " + fmt(v.st.mean) + ", cv " + fmt(v.st.cv);
    }
    return s;
}

// Index of the unique variant under tol, or −1.
int unique_winner(const std::vector<VariantStats>& vs, double tol) {
    int win = -1, count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].st.cv < tol) {
            win = static_cast<int>(i);
            ++count;
        }
    return count == 1 ? win : -1;
}

}  // namespace

VerificationReport check_prop61(const Parameters& p, const std::vector<std::pair<double, double>>& tx,
                                const QuadratureSpec& spec) {
    if (p.n != 1) throw DomainError("prop61: n = 1 only");
    if (tx.empty()) throw DomainError("prop61: no samples");
    VerificationReport r = start("prop61", p, spec, 0);
    const double K = gamma_square_factor(p);
    const double n = p.n, nu = p.nu;
    const double closed_coef = (p.n % 2 == 1 ? 1.0 : -1.0) * pi * std::tgamma(n - 0.5) / std::tgamma(n);
    const double disc_coef = std::pow(2.0, 2.0 * (nu - n + 1.0)) * pi / std::tgamma(n);

    std::vector<VariantStats> vs{{"verbatim_sinh2", {}, {}}, {"cosh2", {}, {}}};
    std::vector<cplx> diag_ratios;
    json js = json::array();
    std::vector<std::string> windows;
    bool all_degenerate = true;
    for (std::size_t i = 0; i < tx.size(); ++i) {
        const double t = tx[i].first, x = tx[i].second;
        const double sh = std::sinh(std::abs(t));
        if (!(x >= 0.0) || (t != 0.0 && !(x < sh * sh && x < sh)))
            throw DomainError("prop61: need 0 <= x < sinh^2(t) and x < sinh|t|");
        js.push_back(json{{"t", t}, {"x", x}});
        cplx lhs = 0.0, ra = 0.0, rb = 0.0;
        if (t != 0.0) {
            all_degenerate = false;
            const double d = std::asinh(std::sqrt(x));
            const QuadResult q = continuous_spectral_integral(p, shifted_wave_function(p, t).continuous, d, spec);
            merge_diag(r, q.diag);
            lhs = K * q.value;
            const double sgn = t > 0 ? 1.0 : -1.0;
            const double ch = std::cosh(t);
            const cplx F = hyp2f1(1.0 - n + nu, 1.0 - n - nu, 1.5 - n, 0.5 - ch / (2.0 * std::sqrt(1.0 + x)));
            const double pref = closed_coef * std::pow(1.0 + x, (nu - n) / 2.0);
            auto closed = [&](double support) {
                return support > 0.0 ? sgn * pref * std::pow(support, 0.5 - n) * F : cplx(0.0);
            };
            const cplx disc = disc_coef * atom_sum(p, x, [&](const SpectrumAtom& a) {
                                  const double k = 2.0 * a.j + n - nu;
                                  return std::sinh(t * k) / k;
                              });
            ra = closed(sh * sh / (1.0 + x) - 1.0) - disc;
            rb = closed(ch * ch / (1.0 + x) - 1.0) - disc;
            vs[0].ratios.push_back(lhs / ra);
            vs[1].ratios.push_back(lhs / rb);
            // diagnostic: the continuous part implied by the closed-form wave kernel
            cplx atoms = 0.0;
            for (const SpectrumAtom& a : discrete_spectrum(p)) {
                const double k = 2.0 * a.j + n - nu;
                atoms += std::sinh(t * k) / k * projector_radial(p, a, d);
            }
            const double closed_wave = sgn * closed_form_wave_radial(p, std::abs(t), d);
            const double scale = K / continuous_coefficient(p);
            diag_ratios.push_back((lhs + scale * atoms) / (scale * closed_wave));
        }
        if (i == 0) {
            r.lhs = lhs;
            r.rhs_variants = {{vs[0].label, ra}, {vs[1].label, rb}};
        }
        std::string w = "(t=" + fmt(t) + ",x=" + fmt(x) + "):";
        w += x < sh ? " x<sinh|t|" : "";
        w += x < sh * sh ? " x<sinh^2 t" : "";
        w += x < sh * sh - 1.0 ? " x<sinh^2 t-1" : "";
        windows.push_back(w);
    }
    r.params["samples"] = js;
    const double tol = tolerances().prop61_cv;
    if (all_degenerate) {
        r.ratio = 0.0;
        r.passed = true;
        r.note("degenerate t=0: lhs and both rhs variants vanish");
        return r;
    }
    for (VariantStats& v : vs) v.st = ratio_stats(v.ratios);
    const int win = unique_winner(vs, tol);
    const VariantStats& shown = vs[win < 0 ? 0 : win];
    r.ratio = shown.st.mean;
    r.ratio_cv = shown.st.cv;
    const cplx rhs0 = r.rhs_variants[win < 0 ? 0 : win].value;
    r.abs_err = std::abs(r.lhs - rhs0);
    r.rel_err = std::abs(r.lhs - rhs0) / std::abs(rhs0);
    r.note(variant_summary(vs));
    r.note(win < 0 ? "winner: none" : "winner: " + shown.label);
    const RatioStats ds = ratio_stats(diag_ratios);
    r.note("diagnostic only: lhs plus atom terms against the closed-form wave kernel: ratio " + fmt(ds.mean) +
           ", cv " + fmt(ds.cv));
    std::string wn = "windows";
    for (const std::string& w : windows) wn += " " + w;
    r.note(wn);
    if (shown.ratios.size() < 2) {
        r.note("ratio-constancy needs at least 2 samples");
        r.passed = false;
    } else {
        r.passed = win >= 0 && r.quadrature_diag.converged;
    }
    return r;
}

VerificationReport check_prop61(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    std::vector<std::pair<double, double>> tx{{1.5, 0.5}, {2.0, 0.8}, {2.5, 1.2}};
    if (rq.t || rq.x) tx = {{rq.t.value_or(1.5), rq.x.value_or(0.5)}};
    VerificationReport r = check_prop61(p, tx, rq.spec);
    r.seed = rq.seed;
    return r;
}

VerificationReport check_prop62(const Parameters& p, cplx mu, const std::vector<double>& xs,
                                const QuadratureSpec& spec) {
    if (p.n != 1) throw DomainError("prop62: n = 1 only");
    if (xs.empty()) throw DomainError("prop62: no samples");
    const double n = p.n, nu = p.nu;
    const cplx a = (n - I * mu + nu) / 2.0, b = (n - I * mu - nu) / 2.0, c = 1.0 - I * mu;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        throw DomainError("prop62: mu lies on the excluded lattice -i(2l+n+-nu)");
    double pmax = 0.0;
    for (const SpectrumAtom& at : discrete_spectrum(p)) pmax = std::max(pmax, std::abs(at.s));
    if (!((mu * mu).real() < -pmax)) throw DomainError("prop62: need Re(mu^2) < -max|s_j|");

    VerificationReport r = start("prop62", p, spec, 0);
    r.params["mu"] = json{{"re", mu.real()}, {"im", mu.imag()}};
    const double K = gamma_square_factor(p);
    const double four = std::pow(2.0, 2.0 * (nu - n));
    const cplx green_coef = pi * four * std::exp(log_gamma(a) + log_gamma(b) - log_gamma(c)) / std::tgamma(n);
    const double disc_coef = 4.0 * pi / std::tgamma(n) * four;
    const double g = 2.0 * std::pow(pi, n + 1) * std::tgamma(n);

    SpectralMultiplier m;
    m.value = [mu](double l) { return 1.0 / (l * l - mu * mu); };
    m.tail = {{0.0, m.value}};

    std::vector<VariantStats> vs{{"verbatim_quarter", {}, {}}, {"half", {}, {}}};
    std::vector<cplx> diag_ratios;
    json js = json::array();
    double worst_tail = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        if (!(x > 0.0)) throw DomainError("prop62: need x > 0");
        js.push_back(x);
        const double d = std::asinh(std::sqrt(x));
        const QuadResult q = continuous_spectral_integral(p, m, d, spec);
        QuadratureSpec doubled = spec;
        doubled.lambda_max *= 2.0;
        const QuadResult q2 = continuous_spectral_integral(p, m, d, doubled);
        merge_diag(r, q.diag);
        merge_diag(r, q2.diag);
        const cplx lhs = K * q.value;
        worst_tail = std::max(worst_tail, std::abs(q2.value - q.value) / std::abs(q.value));
        const cplx F = hyp2f1(a, b, c, 1.0 / (1.0 + x));
        const cplx disc = disc_coef * atom_sum(p, x, [&](const SpectrumAtom& at) { return 1.0 / (at.s - mu * mu); });
        auto green = [&](cplx e) { return green_coef * std::exp(e * std::log1p(x)) * F; };
        const cplx ra = green((nu + I * mu) / 4.0 - n / 2.0) - disc;
        const cplx rb = green((nu + I * mu) / 2.0 - n) - disc;
        vs[0].ratios.push_back(lhs / ra);
        vs[1].ratios.push_back(lhs / rb);
        // diagnostic: Green kernel with exponent (ν+iμ−n)/2 minus the atoms, times g
        cplx dd = 0.0;
        for (const SpectrumAtom& at : discrete_spectrum(p))
            dd += at.tau * jacobi_polynomial(at.j, n - 1.0, -nu, 2.0 * x + 1.0) / (at.s - mu * mu);
        const cplx gd = green_constant(p, mu) * std::exp((nu + I * mu - n) / 2.0 * std::log1p(x)) * F;
        diag_ratios.push_back(lhs / (g * (gd - dd)));
        if (i == 0) {
            r.lhs = lhs;
            r.rhs_variants = {{vs[0].label, ra}, {vs[1].label, rb}};
        }
    }
    r.params["x"] = js;
    for (VariantStats& v : vs) v.st = ratio_stats(v.ratios);
    const double tol = tolerances().prop62_cv;
    const int win = unique_winner(vs, tol);
    const int shown = win < 0 ? 0 : win;
    r.ratio = vs[shown].st.mean;
    r.ratio_cv = vs[shown].st.cv;
    const cplx rhs0 = r.rhs_variants[shown].value;
    r.abs_err = std::abs(r.lhs - rhs0);
    r.rel_err = r.abs_err / std::abs(rhs0);
    const RatioStats ds = ratio_stats(diag_ratios);
    r.note(variant_summary(vs));
    r.note(win < 0 ? "winner: none" : "winner: " + vs[win].label);
    r.note("lambda_max doubling changes lhs by " + fmt(worst_tail) + " (relative)");
    r.note("diagnostic only: Green kernel exponent (nu+i mu-n)/2 against 2 pi^{n+1} Gamma(n) (G - atoms): ratio " +
           fmt(ds.mean) + ", cv " + fmt(ds.cv));
    if (xs.size() < 2) {
        r.note("ratio-constancy needs at least 2 samples");
        r.passed = false;
    } else {
        r.passed = win >= 0 && worst_tail < tolerances().prop62_tail && r.quadrature_diag.converged;
    }
    return r;
}

VerificationReport check_prop62(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    std::vector<double> xs{0.2, 0.5, 1.0};
    if (rq.x) xs = {*rq.x};
    VerificationReport r = check_prop62(p, rq.mu.value_or(cplx(0.0, 5.0)), xs, rq.spec);
    r.seed = rq.seed;
    return r;
}

VerificationReport check_green_resolvent(const Parameters& p, cplx mu, const std::vector<PointPair>& samples,
                                         const QuadratureSpec& spec) {
    if (samples.empty()) throw DomainError("green_resolvent: no samples");
    const cplx xi = green_xi(p, mu);
    if (!(xi.real() > resolvent_abscissa(p)))
        throw DomainError("green_resolvent: Re xi(mu) = " + fmt(xi.real()) + " must exceed the resolvent abscissa");
    VerificationReport r = start("green_resolvent", p, spec, 0);
    r.params["mu"] = json{{"re", mu.real()}, {"im", mu.imag()}};
    r.params["xi"] = json{{"re", xi.real()}, {"im", xi.imag()}};
    std::vector<cplx> ratios, halved;
    for (const PointPair& s : samples) {
        const KernelValue g = green_kernel(p, mu, s.z, s.w, GreenExponent::verbatim);
        const KernelValue gh = green_kernel(p, mu, s.z, s.w, GreenExponent::halved);
        const KernelValue rv = resolvent_kernel(p, xi, s.z, s.w, spec);
        merge_diag(r, rv.diagnostics);
        const cplx rhs = std::pow(1.0 - s.z.norm2(), p.nu / 2.0) * rv.value * std::pow(1.0 - s.w.norm2(), p.nu / 2.0);
        ratios.push_back(g.value / rhs);
        halved.push_back(gh.value / rhs);
        if (ratios.size() == 1) {
            r.lhs = g.value;
            r.rhs = rhs;
        }
    }
    const RatioStats st = ratio_stats(ratios), hs = ratio_stats(halved);
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = rel_diff(r.lhs, r.rhs);
    r.note("lhs: Green kernel, exponent n - i mu/2; rhs: (1-|z|^2)^{nu/2} R(xi(mu),z,w) (1-|w|^2)^{nu/2}");
    r.note("diagnostic only: exponent (n - i mu)/2 gives ratio " + fmt(hs.mean) + ", cv " + fmt(hs.cv));
    r.passed = st.cv < tolerances().green_resolvent_cv && samples.size() >= 2 && r.quadrature_diag.converged;
    if (samples.size() < 2) r.note("ratio-constancy needs at least 2 samples");
    return r;
}

VerificationReport check_green_resolvent(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    std::mt19937_64 rng(rq.seed);
    std::vector<PointPair> samples;
    for (int i = 0; i < 3; ++i) samples.push_back(random_pair(p.n, rng, 0.6, 0.1, 2.0));
    VerificationReport r = check_green_resolvent(p, rq.mu.value_or(cplx(0.0, 5.0)), samples, rq.spec);
    r.seed = rq.seed;
    return r;
}

// ---------------------------------------------------------------- projectors and normalization

namespace {

// Upper bound on d(z, u) over the radial nodes of a ball grid.
double grid_distance_bound(const Parameters& p, const BallPoint& z, const BallGrid& grid) {
    const GaussRule rule = gauss_jacobi_unit(grid.radial, p.nu - p.n - 1.0 - grid.weight_shift, p.n - 1.0);
    const double umax = *std::max_element(rule.nodes.begin(), rule.nodes.end());
    return std::atanh(std::sqrt(z.norm2())) + std::atanh(std::sqrt(umax)) + 0.1;
}

cplx prefactor(const Parameters& p, const CVec& z, const CVec& w) {
    return std::exp(-p.nu * std::log(1.0 - hermitian_inner(z, w)));
}

double dist(const CVec& z, const CVec& w) { return distance(BallPoint(z), BallPoint(w)); }

}  // namespace

VerificationReport check_projectors(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 3.5);
    VerificationReport r = start("projectors", p, rq.spec, rq.seed);
    const Tolerances& tol = tolerances();
    const std::vector<SpectrumAtom> atoms = discrete_spectrum(p);
    std::mt19937_64 rng(rq.seed);
    std::vector<PointPair> samples;
    for (int i = 0; i < 2; ++i) samples.push_back(random_pair(p.n, rng, 0.5, 0.1, 1.5));

    auto K = [&](const SpectrumAtom& a, const CVec& z, const CVec& w) {
        return prefactor(p, z, w) * projector_radial(p, a, dist(z, w));
    };
    auto compose = [&](const SpectrumAtom& a, const SpectrumAtom& b, const PointPair& s) {
        BallGrid grid;
        grid.weight_shift = a.j + b.j;
        return integrate_ball(
            p, [&](const CVec& u) { return K(a, s.z.z(), u) * K(b, u, s.w.z()); }, grid, Execution::parallel);
    };

    std::vector<cplx> kappas;
    double worst_cross = 0.0;
    json kj = json::array();
    for (const PointPair& s : samples) {
        std::vector<cplx> diag;
        for (const SpectrumAtom& a : atoms) {
            const cplx c = compose(a, a, s);
            const cplx k = K(a, s.z.z(), s.w.z());
            diag.push_back(c);
            kappas.push_back(c / k);
            kj.push_back(json{{"j", a.j}, {"re", (c / k).real()}, {"im", (c / k).imag()}});
            r.lhs = c;
            r.rhs = k;
        }
        double scale = 0.0;
        for (const cplx& c : diag) scale = std::max(scale, std::abs(c));
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t k = i + 1; k < atoms.size(); ++k)
                worst_cross = std::max(worst_cross, std::abs(compose(atoms[i], atoms[k], s)) / scale);
    }
    const RatioStats st = ratio_stats(kappas);
    double spread = 0.0;
    for (const cplx& k : kappas) spread = std::max(spread, std::abs(k - st.mean) / std::abs(st.mean));

    double worst_const = 0.0;
    std::string consts;
    for (const SpectrumAtom& a : atoms) {
        const double A = eigenspace_reproducing_constant(p, a.j);
        const double e = std::abs(a.c - A) / std::abs(A);
        worst_const = std::max(worst_const, e);
        consts += " j=" + std::to_string(a.j) + ": c_j/A_j = " + fmt(a.c / A);
    }
    r.params["kappa_samples"] = kj;
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.abs_err = worst_cross;
    r.rel_err = worst_const;
    r.note("lhs/rhs: (P_j o P_j)(z,w) and K_j(z,w) for the last (sample, j); ratio is the mean kappa_j");
    r.note("kappa_j max deviation from mean " + fmt(spread));
    const bool cross_ok = atoms.size() < 2 || worst_cross < tol.projector_cross;
    if (atoms.size() < 2)
        r.note("single atom: no cross term to test");
    else
        r.note("max cross-energy |P_j o P_k|/scale = " + fmt(worst_cross));
    r.note("projector constant vs eigenspace reproducing constant:" + consts + "; abs_err holds the cross-energy, "
           "rel_err the constant mismatch");
    r.passed = cross_ok && spread < tol.projector_kappa && worst_const < tol.projector_constant;
    return r;
}

VerificationReport check_semigroup(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("semigroup", p, rq.spec, rq.seed);
    std::mt19937_64 rng(rq.seed);
    const PointPair s = random_pair(p.n, rng, 0.4, 0.1, 1.0);
    const BallGrid grid;
    const double D = std::max(grid_distance_bound(p, s.z, grid), grid_distance_bound(p, s.w, grid));
    const int nodes = 128;

    std::vector<cplx> kappas;
    json jt = json::array();
    for (const auto& [t1, t2] : std::vector<std::pair<double, double>>{{0.2, 0.3}, {0.5, 0.5}}) {
        auto prof = [&](double t) {
            return RadialProfile::build([&](double d) { return heat_radial(p, t, d, rq.spec); }, 0.0, D, nodes);
        };
        const RadialProfile k1 = prof(t1), k2 = prof(t2);
        merge_diag(r, k1.diagnostics());
        merge_diag(r, k2.diagnostics());
        const cplx comp = integrate_ball(
            p,
            [&](const CVec& u) {
                return prefactor(p, s.z.z(), u) * k1(dist(s.z.z(), u)) * prefactor(p, u, s.w.z()) *
                       k2(dist(u, s.w.z()));
            },
            grid, Execution::parallel);
        const KernelValue direct = heat_kernel(p, t1 + t2, s.z, s.w, rq.spec);
        merge_diag(r, direct.diagnostics);
        kappas.push_back(comp / direct.value);
        jt.push_back(json{{"t1", t1}, {"t2", t2}, {"profile_truncation", std::max(k1.truncation_estimate(), k2.truncation_estimate())}});
        r.lhs = comp;
        r.rhs = direct.value;
    }
    const RatioStats st = ratio_stats(kappas);
    const double spread = std::abs(kappas[0] - kappas[1]) / std::abs(st.mean);
    r.params["times"] = jt;
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.abs_err = std::abs(r.lhs - st.mean * r.rhs);
    r.rel_err = spread;
    r.note("lhs: (K(t1) o K(t2))(z,w); rhs: K(t1+t2)(z,w); ratio is the fitted kappa, rel_err its spread");
    r.note("kappa values " + fmt(kappas[0]) + ", " + fmt(kappas[1]));
    r.passed = spread < tolerances().semigroup_kappa && r.quadrature_diag.converged;
    return r;
}

namespace {

double bump_cutoff(double r) {
    if (r >= 0.85) return 0.0;
    const double s = r / 0.85;
    return std::exp(1.0 - 1.0 / (1.0 - s * s * s * s));
}

double radial_bump(double r) { return std::exp(-8.0 * r * r) * bump_cutoff(r); }

}  // namespace

VerificationReport check_delta_pairing(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("delta_pairing", p, rq.spec, rq.seed);
    const int radial_points = 256;
    // B̂(λ) = ∫ φ_λ(d(0,u)) B(u) dμ_ν(u)
    auto bhat = [&](double l) {
        return integrate_ball_radial(
            p,
            [&](double rr) {
                const double b = radial_bump(rr);
                return b == 0.0 ? cplx(0.0) : b * jacobi_function(l, p.n - 1.0, -p.nu, std::atanh(rr));
            },
            radial_points);
    };
    const double lmax = 40.0, lcheck = 30.0;
    const LineFunction integrand = [&](double l) { return plancherel_weight(p, l) * bhat(l); };
    const QuadResult head = integrate_panels(integrand, 0.0, lcheck, 1.0, 16);
    const QuadResult last = integrate_panels(integrand, lcheck, lmax, 1.0, 16);
    QuadResult cont{head.value + last.value, head.diag};
    cont.diag.merge(last.diag);
    cplx disc = 0.0;
    for (const SpectrumAtom& a : discrete_spectrum(p))
        disc += integrate_ball_radial(
            p, [&](double rr) { return cplx(radial_bump(rr) * projector_radial(p, a, std::atanh(rr))); },
            radial_points);
    const cplx pairing = continuous_coefficient(p) * cont.value + disc;
    const double b0 = radial_bump(0.0);
    r.params["bump"] = "exp(-8|u|^2) with smooth cutoff at |u| = 0.85";
    r.params["z"] = "origin";
    r.lambda_max = lmax;
    r.lhs = pairing;
    r.rhs = b0;
    r.ratio = pairing / b0;
    r.abs_err = std::abs(pairing - b0);
    r.rel_err = r.abs_err / b0;
    const double stability = continuous_coefficient(p) * std::abs(last.value) / std::abs(pairing);
    r.quadrature_diag.nodes = cont.diag.nodes * radial_points;
    r.quadrature_diag.tail_estimate = stability;
    r.note("lhs: <Omega_1(0,.), B> from the spectral side; rhs: B(0); ratio is the fitted kappa");
    r.note("relative change from lambda in [" + fmt(lcheck) + ", " + fmt(lmax) + "]: " + fmt(stability));
    r.passed = stability < tolerances().delta_pairing_stability;
    return r;
}

VerificationReport check_inversion(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("inversion", p, rq.spec, rq.seed);
    const Tolerances& tol = tolerances();
    const BallField F = [](const CVec& z) { return cplx(radial_bump(std::sqrt(z.squaredNorm()))); };
    HelgasonGridSpec gs;
    gs.radial = true;
    const HelgasonGrid grid = helgason_grid(p, F, gs);

    std::vector<BallPoint> zs;
    for (int k = 0; k <= 7; ++k) {
        CVec z = CVec::Zero(p.n);
        z(0) = 0.1 * k;
        zs.emplace_back(z);
    }
    const std::vector<QuadResult> rec = map_indices<QuadResult>(
        zs.size(), [&](std::size_t i) { return fh_inverse(p, grid, zs[i]); }, Execution::parallel);
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double f = F(zs[i].z()).real();
        num += rec[i].value * f;
        den += f * f;
        merge_diag(r, rec[i].diag);
    }
    const cplx kappa = num / den;
    double err2 = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) err2 += std::norm(rec[i].value / kappa - F(zs[i].z()));
    const double l2 = std::sqrt(err2 / den);

    CVec zr = CVec::Zero(p.n);
    zr(0) = 0.4 * std::exp(I * 1.1);
    const QuadResult rot = fh_inverse(p, grid, BallPoint(zr));
    const double radial_err = rel_diff(rot.value, rec[4].value);

    r.params["field"] = "exp(-8|z|^2) with smooth cutoff at |z| = 0.85";
    r.params["r_values"] = "0, 0.1, ..., 0.7";
    r.params["lambda_grid"] = json{{"lambda_max", gs.lambda_max}, {"panels", gs.panels}, {"panel_points", gs.panel_points}};
    r.lambda_max = gs.lambda_max;
    r.lhs = rec.front().value;
    r.rhs = F(zs.front().z());
    r.ratio = kappa;
    r.abs_err = std::abs(r.lhs / kappa - r.rhs);
    r.rel_err = l2;
    r.note("lhs: inversion formula at z = 0 with the printed constants; rhs: F(0); ratio is the fitted kappa");
    r.note("rel_err is the relative L2 error after dividing by kappa");
    r.note("radiality: |z| = 0.4 at two angles differ by " + fmt(radial_err));
    r.passed = l2 < tol.inversion_l2 && radial_err < tol.inversion_radial && r.quadrature_diag.converged;
    return r;
}

VerificationReport check_resolvent_identity(const CheckRequest& rq) {
    const Parameters p = params_or(rq, 1, 2.5);
    VerificationReport r = start("resolvent_identity", p, rq.spec, rq.seed);
    const cplx xi1 = rq.xi.value_or(2.0), xi2 = xi1 + 1.0;
    std::mt19937_64 rng(rq.seed);
    std::vector<PointPair> samples;
    for (int i = 0; i < 2; ++i) samples.push_back(random_pair(p.n, rng, 0.4, 0.3, 1.2));
    BallGrid grid;
    double D = 0.0;
    for (const PointPair& s : samples)
        for (const BallPoint& c : {s.z, s.w})
            for (const BallPoint& o : {s.z, s.w})
                D = std::max(D, grid_distance_bound(p, c, grid) + distance(c, o));
    // Below d_min the log-singular kernels are frozen at d_min; the disc they
    // misrepresent carries O(d_min² |log d_min|) of the integral.
    const double dmin = 1e-3;
    auto prof = [&](cplx xi) {
        return RadialProfile::build([&](double d) { return resolvent_radial(p, xi, d, rq.spec); }, dmin, D, 128,
                                    RadialProfile::Variable::log_distance);
    };
    const RadialProfile r1 = prof(xi1), r2 = prof(xi2);
    merge_diag(r, r1.diagnostics());
    merge_diag(r, r2.diagnostics());

    std::vector<cplx> ratios;
    for (const PointPair& s : samples) {
        const CVec &z = s.z.z(), &w = s.w.z();
        auto tanh2 = [](const CVec& a, const CVec& b) {
            const double sh2 = bergman_sinh2(BallPoint(a), BallPoint(b));
            return sh2 / (1.0 + sh2);
        };
        auto integrand = [&](const CVec& u) {
            const double dz = std::max(dist(z, u), dmin), dw = std::max(dist(u, w), dmin);
            return prefactor(p, z, u) * r1(dz) * prefactor(p, u, w) * r2(dw);
        };
        // partition of unity: each piece keeps one logarithmic singularity and is integrated centered on it
        auto piece = [&](const BallPoint& c, bool at_z) {
            return integrate_ball_centered(
                p,
                [&](const CVec& u) {
                    const double pz = tanh2(z, u), pw = tanh2(w, u);
                    const double chi = at_z ? pw / (pz + pw) : pz / (pz + pw);
                    return chi == 0.0 ? cplx(0.0) : chi * integrand(u);
                },
                c, grid, Execution::parallel);
        };
        const cplx comp = piece(s.z, true) + piece(s.w, false);
        const KernelValue a = resolvent_kernel(p, xi1, s.z, s.w, rq.spec);
        const KernelValue b = resolvent_kernel(p, xi2, s.z, s.w, rq.spec);
        const cplx lhs = (xi1 - xi2) * comp;
        const cplx rhs = b.value - a.value;
        ratios.push_back(lhs / rhs);
        if (ratios.size() == 1) {
            r.lhs = lhs;
            r.rhs = rhs;
        }
    }
    const RatioStats st = ratio_stats(ratios);
    r.params["xi1"] = json{{"re", xi1.real()}, {"im", xi1.imag()}};
    r.params["xi2"] = json{{"re", xi2.real()}, {"im", xi2.imag()}};
    r.params["samples"] = samples.size();
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = rel_diff(r.lhs, r.rhs);
    r.note("lhs: (xi1-xi2) (R(xi1) o R(xi2))(z,w); rhs: R(xi2)(z,w) - R(xi1)(z,w); ratio is the fitted kappa");
    r.passed = st.cv < tolerances().resolvent_identity_cv && r.quadrature_diag.converged;
    return r;
}

}  // namespace hyperball
