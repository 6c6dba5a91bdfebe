#include "hyperball/transform.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hyperball/accumulate.hpp"
#include "hyperball/format.hpp"
#include "hyperball/specfun.hpp"
#include "hyperball/sweep.hpp"

namespace hyperball {

cplx poisson_kernel(const Parameters& p, cplx lambda, const BallPoint& z, const BoundaryPoint& omega) {
    if (z.dim() != omega.dim()) throw DomainError("poisson_kernel: dimension mismatch");
    const cplx q = 1.0 - hermitian_inner(z.z(), omega.omega());
    const double base = (1.0 - z.norm2()) / std::norm(q);
    const cplx expo = (I * lambda + double(p.n) - p.nu) / 2.0;
    return std::exp(expo * std::log(base) - p.nu * std::log(q));
}

cplx spherical_function(const Parameters& p, cplx lambda, const BallPoint& z) {
    const double r2 = z.norm2();
    const cplx a = (-I * lambda + double(p.n) + p.nu) / 2.0;
    const cplx b = (-I * lambda + double(p.n) - p.nu) / 2.0;
    const cplx expo = (-p.nu + p.n - I * lambda) / 2.0;
    return std::exp(expo * std::log1p(-r2)) * hyp2f1(a, b, double(p.n), r2);
}

cplx spherical_kernel(const Parameters& p, double lambda, const BallPoint& z, const BallPoint& w) {
    const double d = std::asinh(std::sqrt(bergman_sinh2(z, w)));
    const cplx pre = std::exp(-p.nu * std::log(1.0 - hermitian_inner(z, w)));
    return pre * jacobi_function(lambda, p.n - 1.0, -p.nu, d);
}

cplx spherical_kernel_quadrature(const Parameters& p, double lambda, const BallPoint& z, const BallPoint& w,
                                 int angular) {
    if (z.dim() != p.n || w.dim() != p.n) throw DomainError("spherical_kernel_quadrature: dimension mismatch");
    return integrate_sphere(
        p.n,
        [&](const CVec& om) {
            const BoundaryPoint omega(om);
            return poisson_kernel(p, lambda, z, omega) * std::conj(poisson_kernel(p, lambda, w, omega));
        },
        angular);
}

cplx fh_forward(const Parameters& p, const BallField& F, cplx lambda, const BoundaryPoint& omega,
                const ForwardOptions& opt) {
    if (omega.dim() != p.n) throw DomainError("fh_forward: dimension mismatch");
    const double r2max = opt.support_radius * opt.support_radius;
    return integrate_ball(
        p,
        [&](const CVec& z) {
            const cplx f = F(z);
            if (f == 0.0) return cplx(0.0);
            if (z.squaredNorm() > r2max)
                throw DomainError("fh_forward: field does not vanish outside the support radius");
            return f * poisson_kernel(p, -lambda, BallPoint(z), omega);
        },
        opt.grid);
}

std::vector<HelgasonSample> HelgasonGrid::samples() const {
    std::vector<HelgasonSample> out;
    const std::size_t M = omega_count();
    out.reserve(2 * lambda.size() * M);
    for (std::size_t k = 0; k < lambda.size(); ++k)
        for (std::size_t m = 0; m < M; ++m) {
            const BoundaryPoint om(sphere.points[m]);
            out.push_back({-lambda[k], om, minus[k * M + m]});
            out.push_back({lambda[k], om, plus[k * M + m]});
        }
    return out;
}

namespace {

HelgasonGrid empty_grid(const Parameters& p, const HelgasonGridSpec& spec) {
    if (spec.panels < 1 || spec.panel_points < 2 || !(spec.lambda_max > 0.0))
        throw DomainError("HelgasonGridSpec: need panels >= 1, panel_points >= 2, lambda_max > 0");
    HelgasonGrid g;
    g.spec = spec;
    g.sphere = sphere_rule(p.n, spec.angular);
    const GaussRule& gl = gauss_legendre(spec.panel_points);
    const double h = spec.lambda_max / spec.panels;
    for (int k = 0; k < spec.panels; ++k)
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            g.lambda.push_back(h * (k + 0.5 * (gl.nodes[i] + 1.0)));
            g.lambda_weight.push_back(0.5 * h * gl.weights[i]);
        }
    const std::size_t M = g.omega_count();
    g.plus.assign(g.lambda.size() * M, 0.0);
    g.minus.assign(g.lambda.size() * M, 0.0);
    g.atoms.assign(discrete_spectrum(p).size() * M, 0.0);
    return g;
}

}  // namespace

HelgasonGrid zero_helgason_grid(const Parameters& p, const HelgasonGridSpec& spec) { return empty_grid(p, spec); }

HelgasonGrid helgason_grid(const Parameters& p, const BallField& F, const HelgasonGridSpec& spec,
                           const ForwardOptions& opt) {
    HelgasonGrid g = empty_grid(p, spec);
    const std::size_t K = g.lambda.size();
    const std::size_t M = g.omega_count();
    const std::vector<SpectrumAtom> atoms = discrete_spectrum(p);
    const std::size_t M_eval = spec.radial ? 1 : M;

    // one task per (λ, ω) pair: ±λ_k first, then the atoms
    const std::size_t tasks = (2 * K + atoms.size()) * M_eval;
    const std::vector<cplx> vals = map_indices<cplx>(
        tasks,
        [&](std::size_t t) {
            const std::size_t m = t % M_eval, row = t / M_eval;
            const BoundaryPoint om(g.sphere.points[m]);
            cplx lambda;
            if (row < K)
                lambda = g.lambda[row];
            else if (row < 2 * K)
                lambda = -g.lambda[row - K];
            else
                lambda = atoms[row - 2 * K].lambda;
            return fh_forward(p, F, lambda, om, opt);
        },
        Execution::parallel);

    for (std::size_t row = 0; row < 2 * K + atoms.size(); ++row)
        for (std::size_t m = 0; m < M; ++m) {
            const cplx v = vals[row * M_eval + (spec.radial ? 0 : m)];
            if (row < K)
                g.plus[row * M + m] = v;
            else if (row < 2 * K)
                g.minus[(row - K) * M + m] = v;
            else
                g.atoms[(row - 2 * K) * M + m] = v;
        }
    return g;
}

QuadResult fh_inverse(const Parameters& p, const HelgasonGrid& g, const BallPoint& z) {
    if (z.dim() != p.n) throw DomainError("fh_inverse: dimension mismatch");
    const std::size_t K = g.lambda.size();
    const std::size_t M = g.omega_count();
    const double A = 0.25 * std::tgamma(double(p.n)) / (std::pow(2.0, 2.0 * (p.nu - p.n)) * std::pow(pi, p.n + 1));

    std::vector<BoundaryPoint> omegas;
    omegas.reserve(M);
    for (const CVec& om : g.sphere.points) omegas.emplace_back(om);

    QuadResult res;
    ComplexSum cont;
    double peak = 0.0, last = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double wt = plancherel_weight(p, g.lambda[k]);
        ComplexSum inner;
        double row_max = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            const cplx fp = g.plus[k * M + m], fm = g.minus[k * M + m];
            row_max = std::max({row_max, std::abs(fp), std::abs(fm)});
            if (fp == 0.0 && fm == 0.0) continue;
            inner.add(g.sphere.weights[m] * (fp * poisson_kernel(p, g.lambda[k], z, omegas[m]) +
                                             fm * poisson_kernel(p, -g.lambda[k], z, omegas[m])));
        }
        cont.add(g.lambda_weight[k] * wt * inner.value());
        peak = std::max(peak, wt * row_max);
        if (k + 1 == K) last = wt * row_max;
    }
    res.diag.nodes = static_cast<long>(K * M * 2);

    ComplexSum disc;
    const std::vector<SpectrumAtom> atoms = discrete_spectrum(p);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        ComplexSum inner;
        for (std::size_t m = 0; m < M; ++m) {
            const cplx f = g.atoms[j * M + m];
            if (f == 0.0) continue;
            inner.add(g.sphere.weights[m] * f * poisson_kernel(p, atoms[j].lambda, z, omegas[m]));
        }
        disc.add(atoms[j].c * inner.value());
    }
    res.value = A * cont.value() + disc.value();

    const double spacing = g.spec.lambda_max / (g.spec.panels * g.spec.panel_points);
    const double d0 = std::asinh(std::sqrt(bergman_sinh2(BallPoint::origin(p.n), z)));
    if (spacing > pi / (4.0 * (1.0 + d0))) res.diag.fail("lambda grid too coarse for this z");
    res.diag.tail_estimate = last;
    if (peak > 0.0 && last > 1e-3 * peak) res.diag.fail("Helgason samples not decayed at lambda_max");
    return res;
}

void write_helgason_csv(std::ostream& os, const std::vector<HelgasonSample>& samples) {
    const int n = samples.empty() ? 1 : samples.front().omega.dim();
    os << "lambda";
    for (int k = 1; k <= n; ++k) os << ",omega" << k << "_re,omega" << k << "_im";
    os << ",value_re,value_im\n";
    for (const HelgasonSample& s : samples) {
        os << format_g17(s.lambda);
        for (int k = 0; k < n; ++k)
            os << ',' << format_g17(s.omega.omega()(k).real()) << ',' << format_g17(s.omega.omega()(k).imag());
        os << ',' << format_g17(s.value.real()) << ',' << format_g17(s.value.imag()) << '\n';
    }
}

}  // namespace hyperball
