#include "hyperball/quad.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>

#include "hyperball/accumulate.hpp"

namespace hyperball {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
    if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
    if (!(lambda_max > 0.0)) throw DomainError("lambda_max must be positive");
    if (panel_points < 4) throw DomainError("panel_points must be at least 4");
    if (accel_terms < 1) throw DomainError("accel_terms must be at least 1");
    if (oscillation_period && !(*oscillation_period > 0.0)) throw DomainError("oscillation_period must be positive");
}

void QuadDiagnostics::merge(const QuadDiagnostics& other) {
    nodes += other.nodes;
    tail_estimate += other.tail_estimate;
    error_estimate += other.error_estimate;
    if (!other.converged) fail(other.message);
}

void QuadDiagnostics::fail(const std::string& why) {
    if (converged) message = why;
    converged = false;
}

namespace {

GaussRule golub_welsch(int points, const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(points, points);
    for (int k = 0; k < points; ++k) T(k, k) = diag(k);
    for (int k = 0; k + 1 < points; ++k) T(k, k + 1) = T(k + 1, k) = off(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    GaussRule r;
    r.nodes.resize(points);
    r.weights.resize(points);
    for (int k = 0; k < points; ++k) {
        r.nodes[k] = es.eigenvalues()(k);
        const double v = es.eigenvectors()(0, k);
        r.weights[k] = mu0 * v * v;
    }
    return r;
}

// Newton on the Legendre recurrence; more accurate weights than Golub–Welsch.
GaussRule legendre_rule(int points) {
    GaussRule r;
    r.nodes.resize(points);
    r.weights.resize(points);
    for (int i = 0; i < points; ++i) {
        double x = std::cos(pi * (i + 0.75) / (points + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[points - 1 - i] = x;
        r.weights[points - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

struct AdaptiveState {
    const LineFunction& f;
    int points;
    double tol_density;  // allowed error per unit length
    double abs_tol;
    int max_depth;
    long nodes = 0;
    bool hit_depth = false;
    double err = 0.0;
};

void adapt(AdaptiveState& s, double a, double b, cplx whole, int depth, ComplexSum& out) {
    const double m = 0.5 * (a + b);
    const cplx left = gl_panel(s.f, a, m, s.points);
    const cplx right = gl_panel(s.f, m, b, s.points);
    s.nodes += 2L * s.points;
    const cplx refined = left + right;
    const double diff = std::abs(refined - whole);
    if (!std::isfinite(diff)) throw std::runtime_error("integrand is not finite near lambda = " + std::to_string(m));
    if (diff <= std::max(s.abs_tol, s.tol_density * (b - a)) || depth >= s.max_depth) {
        if (depth >= s.max_depth && diff > s.tol_density * (b - a)) s.hit_depth = true;
        s.err += diff;
        out.add(refined);
        return;
    }
    adapt(s, a, m, left, depth + 1, out);
    adapt(s, m, b, right, depth + 1, out);
}

// Adaptive Gauss–Legendre over fixed initial panels; deterministic depth-first order.
QuadResult adaptive(const LineFunction& f, double a, double b, double width, const QuadratureSpec& spec) {
    QuadResult res;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width - 1e-12)));
    const double h = (b - a) / panels;
    // crude pass for the scale that sets the absolute error budget
    std::vector<cplx> crude(panels);
    ComplexSum crude_sum;
    for (int k = 0; k < panels; ++k) {
        crude[k] = gl_panel(f, a + k * h, a + (k + 1) * h, spec.panel_points);
        crude_sum.add(crude[k]);
    }
    double scale = std::abs(crude_sum.value());
    for (const cplx& c : crude) scale = std::max(scale, 1e-3 * std::abs(c));
    AdaptiveState s{f, spec.panel_points, std::max(spec.rel_tol * scale, spec.abs_tol) / (b - a) * 0.1,
                    spec.abs_tol / panels, 30};
    s.nodes = static_cast<long>(panels) * spec.panel_points;
    ComplexSum out;
    for (int k = 0; k < panels; ++k) adapt(s, a + k * h, a + (k + 1) * h, crude[k], 0, out);
    res.value = out.value();
    res.diag.nodes = s.nodes;
    res.diag.error_estimate = s.err;
    if (s.hit_depth) res.diag.fail("adaptive bisection hit its depth limit");
    return res;
}

// Σ p_k by `rounds` rounds of pairwise averaging of the partial sums S_0 … S_rounds.
cplx averaged_partial_sums(const std::vector<cplx>& pieces, int rounds, cplx base) {
    std::vector<cplx> s(rounds + 1);
    ComplexSum acc;
    acc.add(base);
    for (int k = 0; k <= rounds; ++k) {
        acc.add(pieces[k]);
        s[k] = acc.value();
    }
    for (int r = 0; r < rounds; ++r)
        for (int k = 0; k + 1 < static_cast<int>(s.size()) - r; ++k) s[k] = 0.5 * (s[k] + s[k + 1]);
    return s[0];
}

// Tail beyond `start` as a sum of half-period pieces, accelerated by averaging.
// Rounds double from accel_terms (up to 8×) until successive estimates agree.
QuadResult averaged_tail(const LineFunction& f, double start, double half, const QuadratureSpec& spec, double scale) {
    QuadResult res;
    std::vector<cplx> pieces;
    auto extend = [&](int count) {
        while (static_cast<int>(pieces.size()) < count) {
            const double a = start + static_cast<double>(pieces.size()) * half;
            pieces.push_back(gl_panel(f, a, a + half, spec.panel_points));
        }
    };
    int rounds = spec.accel_terms;
    cplx v1, v2;
    double err = 0.0;
    for (;;) {
        extend(rounds + 2);
        v1 = averaged_partial_sums(pieces, rounds, 0.0);
        const std::vector<cplx> shifted(pieces.begin() + 1, pieces.end());
        v2 = averaged_partial_sums(shifted, rounds, pieces[0]);
        err = std::abs(v1 - v2);
        if (!std::isfinite(err)) throw std::runtime_error("tail integrand is not finite");
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::max(scale, std::abs(v1))) * 0.1 ||
            rounds >= 8 * spec.accel_terms)
            break;
        rounds *= 2;
    }
    res.value = v1;
    res.diag.nodes = static_cast<long>(pieces.size()) * spec.panel_points;
    res.diag.error_estimate = err;
    res.diag.tail_estimate = std::abs(v1);
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::max(scale, std::abs(v1))))
        res.diag.fail("tail averaging did not settle");
    return res;
}

}  // namespace

const GaussRule& gauss_legendre(int points) {
    // per-thread cache keeps parallel sweeps lock-free
    thread_local std::map<int, GaussRule> cache;
    auto it = cache.find(points);
    if (it == cache.end()) it = cache.emplace(points, legendre_rule(points)).first;
    return it->second;
}

GaussRule gauss_jacobi_unit(int points, double a, double b) {
    if (points < 1) throw DomainError("gauss_jacobi_unit: points must be positive");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi_unit: exponents must exceed -1");
    // Jacobi weight (1−x)^a (1+x)^b on [−1, 1], then x = 2u − 1.
    Eigen::VectorXd diag(points), off(std::max(points - 1, 1));
    for (int k = 0; k < points; ++k) {
        const double s = 2.0 * k + a + b;
        diag(k) = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < points; ++k) {
        const double s = 2.0 * k + a + b;
        // (k+a+b)/(s−1) → 1 when a+b = −1 at k = 1
        const double ratio = std::abs(s - 1.0) < 1e-14 ? 1.0 : (k + a + b) / (s - 1.0);
        off(k - 1) = std::sqrt(4.0 * k * (k + a) * (k + b) * ratio / (s * s * (s + 1.0)));
    }
    const double log_mu0 = (a + b + 1.0) * std::log(2.0) + gsl_sf_lngamma(a + 1.0) + gsl_sf_lngamma(b + 1.0) -
                           gsl_sf_lngamma(a + b + 2.0);
    GaussRule r = golub_welsch(points, diag, off, std::exp(log_mu0));
    const double scale = std::pow(2.0, -(a + b + 1.0));
    for (int k = 0; k < points; ++k) {
        r.nodes[k] = 0.5 * (r.nodes[k] + 1.0);
        r.weights[k] *= scale;
    }
    return r;
}

cplx gl_panel(const LineFunction& f, double a, double b, int points) {
    const GaussRule& r = gauss_legendre(points);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    ComplexSum s;
    for (int k = 0; k < points; ++k) s.add(r.weights[k] * f(c + h * r.nodes[k]));
    return h * s.value();
}

QuadResult integrate_panels(const LineFunction& f, double a, double b, double max_width, int points) {
    QuadResult res;
    if (!(b > a)) return res;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_width - 1e-12)));
    const double h = (b - a) / panels;
    ComplexSum s;
    for (int k = 0; k < panels; ++k) s.add(gl_panel(f, a + k * h, k + 1 == panels ? b : a + (k + 1) * h, points));
    res.value = s.value();
    res.diag.nodes = static_cast<long>(panels) * points;
    return res;
}

QuadResult integrate_oscillatory_tail(const LineFunction& g, double omega, double a, const QuadratureSpec& spec) {
    QuadResult res;
    const int pts = spec.panel_points;
    if (std::abs(omega) < 1e-12) {
        // λ = a e^s: ∫₀^∞ g(a e^s) a e^s ds, panels of width 1 until the integrand is negligible
        auto h = [&](double s) { return g(a * std::exp(s)) * a * std::exp(s); };
        ComplexSum acc;
        double last = 0.0;
        int k = 0;
        for (; k < 200; ++k) {
            const cplx piece = gl_panel(h, k, k + 1.0, pts);
            acc.add(piece);
            res.diag.nodes += pts;
            last = std::abs(piece);
            if (k >= 3 && last <= std::max(spec.abs_tol, spec.rel_tol * std::abs(acc.value())) * 1e-2) break;
        }
        res.value = acc.value();
        res.diag.tail_estimate = last;
        if (k == 200) res.diag.fail("non-oscillatory tail does not decay");
        return res;
    }
    const double half = pi / std::abs(omega);
    auto f = [&](double x) { return std::exp(I * (omega * x)) * g(x); };
    return averaged_tail(f, a, half, spec, 0.0);
}

QuadResult integrate_halfline(const LineFunction& f, const QuadratureSpec& spec) {
    spec.validate();
    QuadResult res;
    const double lmax = spec.lambda_max;
    if (!spec.oscillation_period) {
        res = adaptive(f, 0.0, lmax, std::min(1.0, lmax), spec);
        const QuadResult probe = integrate_panels(f, lmax, 2.0 * lmax, 1.0, spec.panel_points);
        res.diag.nodes += probe.diag.nodes;
        res.diag.tail_estimate = std::abs(probe.value);
        if (res.diag.tail_estimate > std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value)))
            res.diag.fail("integrand not negligible beyond lambda_max; use the oscillatory path");
        return res;
    }
    const double half = 0.5 * *spec.oscillation_period;
    const double body_end = half * std::max(1.0, std::floor(lmax / half));
    res = adaptive(f, 0.0, body_end, half, spec);
    const QuadResult tail = averaged_tail(f, body_end, half, spec, std::abs(res.value));
    res.value += tail.value;
    res.diag.merge(tail.diag);
    return res;
}

// ---------------------------------------------------------------- sphere and ball

SphereRule sphere_rule(int n, int angular) {
    if (angular < 2) throw DomainError("sphere rule needs at least 2 angular nodes");
    SphereRule r;
    if (n == 1) {
        for (int k = 0; k < angular; ++k) {
            const double th = 2.0 * pi * k / angular;
            r.points.push_back(CVec::Constant(1, std::polar(1.0, th)));
            r.weights.push_back(1.0 / angular);
        }
        return r;
    }
    if (n == 2) {
        // ω = (√(1−s) e^{iθ₁}, √s e^{iθ₂}); σ is ds dθ₁ dθ₂ / (4π²) on [0,1]×[0,2π)²
        const int m = std::max(2, angular / 2);
        const GaussRule& g = gauss_legendre(m);
        for (int a = 0; a < m; ++a) {
            const double s = 0.5 * (g.nodes[a] + 1.0);
            const double ws = 0.5 * g.weights[a];
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    CVec w(2);
                    w(0) = std::polar(std::sqrt(1.0 - s), 2.0 * pi * b / m);
                    w(1) = std::polar(std::sqrt(s), 2.0 * pi * c / m);
                    r.points.push_back(std::move(w));
                    r.weights.push_back(ws / (static_cast<double>(m) * m));
                }
        }
        return r;
    }
    throw DomainError("sphere quadrature supports n = 1 and n = 2 only");
}

cplx integrate_sphere(int n, const SphereFunction& f, int angular) {
    const SphereRule r = sphere_rule(n, angular);
    ComplexSum s;
    for (std::size_t k = 0; k < r.points.size(); ++k) s.add(r.weights[k] * f(r.points[k]));
    return s.value();
}

cplx integrate_ball(const Parameters& p, const BallField& f, const BallGrid& grid, Execution mode) {
    if (p.n != 1 && p.n != 2) throw DomainError("ball quadrature supports n = 1 and n = 2 only");
    const double a = p.nu - p.n - 1.0 - grid.weight_shift;
    const GaussRule radial = gauss_jacobi_unit(grid.radial, a, p.n - 1.0);
    const SphereRule sphere = sphere_rule(p.n, grid.angular);
    // σ_{2n−1}/2 = πⁿ/Γ(n) from dm = r^{2n−1} dr dS and r² = u
    const double front = std::pow(pi, p.n) / std::tgamma(static_cast<double>(p.n));
    const std::vector<cplx> rings = map_indices<cplx>(
        grid.radial,
        [&](std::size_t i) {
            const double r = std::sqrt(radial.nodes[i]);
            ComplexSum ring;
            for (std::size_t k = 0; k < sphere.points.size(); ++k)
                ring.add(sphere.weights[k] * f(r * sphere.points[k]));
            return ring.value();
        },
        mode);
    ComplexSum total;
    for (int i = 0; i < grid.radial; ++i) {
        const double shift = grid.weight_shift == 0.0 ? 1.0 : std::pow(1.0 - radial.nodes[i], grid.weight_shift);
        total.add(radial.weights[i] * shift * rings[i]);
    }
    return front * total.value();
}

cplx integrate_ball_radial(const Parameters& p, const std::function<cplx(double)>& g, int points,
                           double weight_shift) {
    const GaussRule radial = gauss_jacobi_unit(points, p.nu - p.n - 1.0 - weight_shift, p.n - 1.0);
    const double front = std::pow(pi, p.n) / std::tgamma(static_cast<double>(p.n));
    ComplexSum total;
    for (int i = 0; i < points; ++i) {
        const double shift = weight_shift == 0.0 ? 1.0 : std::pow(1.0 - radial.nodes[i], weight_shift);
        total.add(radial.weights[i] * shift * g(std::sqrt(radial.nodes[i])));
    }
    return front * total.value();
}

cplx integrate_ball_centered(const Parameters& p, const BallField& f, const BallPoint& c, const BallGrid& grid,
                             Execution mode) {
    if (c.dim() != p.n) throw DomainError("integrate_ball_centered: dimension mismatch");
    const GroupElement g = transvection(c);
    const double c2 = c.norm2();
    auto pulled = [&](const CVec& v) {
        const BallPoint w = mobius_act(g, BallPoint(v));
        const double jac = std::pow((1.0 - c2) / std::norm(1.0 + hermitian_inner(v, c.z())), p.nu);
        return jac * f(w.z());
    };
    return integrate_ball(p, pulled, grid, mode);
}

}  // namespace hyperball
