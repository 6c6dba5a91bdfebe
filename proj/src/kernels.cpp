#include "hyperball/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "hyperball/specfun.hpp"

namespace hyperball {

namespace {

KernelValue assemble(const Parameters& p, const BallPoint& z, const BallPoint& w, const RadialValue& r) {
    KernelValue k;
    k.prefactor_exponent = kernel_prefactor_exponent(p, z, w);
    k.radial = r.value;
    k.value = std::exp(k.prefactor_exponent) * r.value;
    k.diagnostics = r.diagnostics;
    return k;
}

void check_dims(const Parameters& p, const BallPoint& z, const BallPoint& w) {
    if (z.dim() != p.n || w.dim() != p.n) throw DomainError("point dimension must equal n");
}

double distance(const BallPoint& z, const BallPoint& w) { return std::asinh(std::sqrt(bergman_sinh2(z, w))); }

}  // namespace

cplx kernel_prefactor_exponent(const Parameters& p, const BallPoint& z, const BallPoint& w) {
    return -p.nu * std::log(1.0 - hermitian_inner(z, w));
}

// ---------------------------------------------------------------- density and projectors

KernelValue spectral_density_continuous(const Parameters& p, double s, const BallPoint& z, const BallPoint& w) {
    check_dims(p, z, w);
    RadialValue r{0.0, {}};
    if (s > 0.0) {
        const double l = std::sqrt(s);
        const double d = distance(z, w);
        const cplx phi = d < kCoincidentDistance ? cplx(1.0) : jacobi_function(l, p.n - 1.0, -p.nu, d);
        r.value = 0.5 * continuous_coefficient(p) * plancherel_weight(p, l) / l * phi.real();
    }
    return assemble(p, z, w, r);
}

double projector_radial(const Parameters& p, const SpectrumAtom& atom, double d) {
    return atom.tau * jacobi_polynomial(atom.j, p.n - 1.0, -p.nu, std::cosh(2.0 * d));
}

KernelValue projector_kernel(const Parameters& p, const SpectrumAtom& atom, const BallPoint& z, const BallPoint& w) {
    check_dims(p, z, w);
    // cosh 2d = 1 + 2 sinh²d
    const double y = 1.0 + 2.0 * bergman_sinh2(z, w);
    return assemble(p, z, w, {atom.tau * jacobi_polynomial(atom.j, p.n - 1.0, -p.nu, y), {}});
}

KernelValue projector_kernel_hypergeometric(const Parameters& p, const SpectrumAtom& atom, const BallPoint& z,
                                            const BallPoint& w) {
    check_dims(p, z, w);
    const double x = -bergman_sinh2(z, w);  // 1 − cosh²d
    const cplx f = hyp2f1(-static_cast<double>(atom.j), atom.j - p.nu + p.n, static_cast<double>(p.n), x);
    return assemble(p, z, w, {atom.c * f, {}});
}

// ---------------------------------------------------------------- functional calculus

SpectralFunction spectral_function(std::function<cplx(double)> f) {
    SpectralFunction sf;
    sf.continuous.value = [f](double l) { return f(l * l); };
    sf.at_atom = [f](const SpectrumAtom& a) { return f(a.s); };
    return sf;
}

RadialValue functional_calculus_radial(const Parameters& p, const SpectralFunction& f, double d,
                                       const QuadratureSpec& spec) {
    const QuadResult q = continuous_spectral_integral(p, f.continuous, d, spec);
    RadialValue r;
    r.value = continuous_coefficient(p) * q.value;
    r.diagnostics = q.diag;
    for (const SpectrumAtom& a : discrete_spectrum(p)) r.value += f.at_atom(a) * projector_radial(p, a, d);
    return r;
}

KernelValue functional_calculus(const Parameters& p, const SpectralFunction& f, const BallPoint& z,
                                const BallPoint& w, const QuadratureSpec& spec) {
    check_dims(p, z, w);
    return assemble(p, z, w, functional_calculus_radial(p, f, distance(z, w), spec));
}

KernelValue functional_calculus(const Parameters& p, std::function<cplx(double)> f, const BallPoint& z,
                                const BallPoint& w, const QuadratureSpec& spec) {
    return functional_calculus(p, spectral_function(std::move(f)), z, w, spec);
}

// ---------------------------------------------------------------- heat, resolvent, wave

SpectralFunction heat_function(const Parameters& p, double t) {
    if (!(t > 0.0)) throw DomainError("heat kernel requires t > 0");
    const double a2 = p.gap() * p.gap();
    SpectralFunction f;
    f.continuous.value = [t, a2](double l) { return cplx(std::exp(-t * (l * l + a2))); };
    f.at_atom = [t](const SpectrumAtom& a) { return cplx(std::exp(a.rho * t)); };
    return f;
}

SpectralFunction resolvent_function(const Parameters& p, cplx xi) {
    const double a2 = p.gap() * p.gap();
    if (std::abs(xi.imag()) < 1e-8 && xi.real() <= -a2 + 1e-8)
        throw DomainError("xi lies on the continuous-spectrum cut (-inf, -(nu-n)^2]");
    for (const SpectrumAtom& a : discrete_spectrum(p))
        if (std::abs(xi + a.rho) < 1e-8)
            throw DomainError("xi is within 1e-8 of the pole -rho_" + std::to_string(a.j));
    SpectralFunction f;
    auto m = [xi, a2](double l) { return 1.0 / (l * l + a2 + xi); };
    f.continuous.value = m;
    f.continuous.tail = {{0.0, m}};
    f.at_atom = [xi](const SpectrumAtom& a) { return 1.0 / (xi - a.rho); };
    return f;
}

SpectralFunction wave_function(const Parameters& p, double t) {
    const double a2 = p.gap() * p.gap();
    SpectralFunction f;
    f.continuous.value = [t, a2](double l) {
        const double r = std::sqrt(l * l + a2);
        return cplx(std::sin(t * r) / r);
    };
    // √(λ²+a²) = λ + δ(λ): sin(tR)/R = e^{itλ} e^{itδ}/(2iR) − e^{−itλ} e^{−itδ}/(2iR)
    auto plus = [t, a2](double l) {
        const double r = std::sqrt(l * l + a2);
        const double delta = a2 / (l + r);
        return std::exp(I * (t * delta)) / (2.0 * I * r);
    };
    auto minus = [t, a2](double l) {
        const double r = std::sqrt(l * l + a2);
        const double delta = a2 / (l + r);
        return -std::exp(-I * (t * delta)) / (2.0 * I * r);
    };
    f.continuous.tail = {{t, plus}, {-t, minus}};
    f.continuous.frequency = std::abs(t);
    f.at_atom = [t](const SpectrumAtom& a) {
        // λ_j² + (ν−n)² = −ρ_j = 4j(ν−n−j); the j = 0 limit of sin(ωt)/ω is t
        if (a.j == 0) return cplx(t);
        const double om = std::sqrt(-a.rho);
        return cplx(std::sin(t * om) / om);
    };
    return f;
}

SpectralFunction shifted_wave_function(const Parameters& p, double t) {
    SpectralFunction f;
    f.continuous.value = [t](double l) { return cplx(l == 0.0 ? t : std::sin(t * l) / l); };
    auto plus = [](double l) { return 1.0 / (2.0 * I * l); };
    auto minus = [](double l) { return -1.0 / (2.0 * I * l); };
    f.continuous.tail = {{t, plus}, {-t, minus}};
    f.continuous.frequency = std::abs(t);
    const int n = p.n;
    const double nu = p.nu;
    f.at_atom = [t, n, nu](const SpectrumAtom& a) {
        const double k = 2.0 * a.j + n - nu;
        return cplx(std::sinh(t * k) / k);
    };
    return f;
}

RadialValue heat_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec) {
    QuadratureSpec s = spec;
    if (t > 0.0) s.lambda_max = std::max(spec.lambda_max, std::sqrt(kHeatCutoffExponent / t));
    return functional_calculus_radial(p, heat_function(p, t), d, s);
}

KernelValue heat_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                        const QuadratureSpec& spec) {
    check_dims(p, z, w);
    return assemble(p, z, w, heat_radial(p, t, distance(z, w), spec));
}

RadialValue resolvent_radial(const Parameters& p, cplx xi, double d, const QuadratureSpec& spec) {
    if (d < kCoincidentDistance) throw DomainError("resolvent kernel is singular at z = w");
    return functional_calculus_radial(p, resolvent_function(p, xi), d, spec);
}

KernelValue resolvent_kernel(const Parameters& p, cplx xi, const BallPoint& z, const BallPoint& w,
                             const QuadratureSpec& spec) {
    check_dims(p, z, w);
    return assemble(p, z, w, resolvent_radial(p, xi, distance(z, w), spec));
}

namespace {

void check_wave_regime(double t, double d, WaveOptions opt) {
    if (!opt.force && !(d < std::abs(t)))
        throw RegimeError("wave kernel evaluated outside the light cone: d(z,w) = " + std::to_string(d) +
                          " >= |t| = " + std::to_string(std::abs(t)));
}

}  // namespace

RadialValue wave_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec) {
    if (t == 0.0) return {0.0, {}};
    return functional_calculus_radial(p, wave_function(p, t), d, spec);
}

KernelValue wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                        const QuadratureSpec& spec, WaveOptions opt) {
    check_dims(p, z, w);
    const double d = distance(z, w);
    if (t != 0.0) check_wave_regime(t, d, opt);
    return assemble(p, z, w, wave_radial(p, t, d, spec));
}

RadialValue shifted_wave_radial(const Parameters& p, double t, double d, const QuadratureSpec& spec) {
    if (t == 0.0) return {0.0, {}};
    return functional_calculus_radial(p, shifted_wave_function(p, t), d, spec);
}

KernelValue shifted_wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w,
                                const QuadratureSpec& spec, WaveOptions opt) {
    check_dims(p, z, w);
    const double d = distance(z, w);
    if (t != 0.0) check_wave_regime(t, d, opt);
    return assemble(p, z, w, shifted_wave_radial(p, t, d, spec));
}

double closed_form_wave_radial(const Parameters& p, double t, double d) {
    if (p.n != 1) throw DomainError("closed-form wave kernel is pointwise only for n = 1");
    if (std::abs(t) <= d) return 0.0;
    const double cd = std::cosh(d), ct = std::cosh(t);
    const double cn = std::tgamma(0.5) / (2.0 * pi);
    const double support = ct * ct / (cd * cd) - 1.0;
    const cplx f = hyp2f1(p.nu, -p.nu, 0.5, (cd - ct) / (2.0 * cd));
    return cn * std::pow(cd, p.nu - 1.0) / std::sqrt(support) * f.real();
}

KernelValue closed_form_wave_kernel(const Parameters& p, double t, const BallPoint& z, const BallPoint& w) {
    check_dims(p, z, w);
    return assemble(p, z, w, {closed_form_wave_radial(p, t, distance(z, w)), {}});
}

// ---------------------------------------------------------------- Green kernel

cplx green_constant(const Parameters& p, cplx mu) {
    const cplx a = (double(p.n) - I * mu + p.nu) / 2.0;
    const cplx b = (double(p.n) - I * mu - p.nu) / 2.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        throw DomainError("mu lies on the excluded lattice -i(2l+n+-nu)");
    const cplx c = 1.0 - I * mu;
    if (is_nonpositive_integer(c)) throw PoleError("green kernel: 1 - i mu is a non-positive integer");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(c)) / (2.0 * std::pow(pi, p.n));
}

KernelValue green_kernel(const Parameters& p, cplx mu, const BallPoint& z, const BallPoint& w,
                         GreenExponent exponent) {
    check_dims(p, z, w);
    const cplx cmu = green_constant(p, mu);
    const double sh2 = bergman_sinh2(z, w);
    if (sh2 < kCoincidentDistance * kCoincidentDistance) throw DomainError("green kernel is singular at z = w");
    const double q = 1.0 / (1.0 + sh2);  // (1−|z|²)(1−|w|²)/|1−⟨z,w⟩|²
    const cplx a = (double(p.n) - I * mu + p.nu) / 2.0;
    const cplx b = (double(p.n) - I * mu - p.nu) / 2.0;
    const cplx f = hyp2f1(a, b, 1.0 - I * mu, q);
    const cplx expo = exponent == GreenExponent::verbatim ? double(p.n) - I * mu / 2.0 : (double(p.n) - I * mu) / 2.0;
    KernelValue k;
    // ((1−conj⟨z,w⟩)/(1−⟨z,w⟩))^{ν/2} = exp(−iν arg(1−⟨z,w⟩))
    k.prefactor_exponent = -I * p.nu * std::arg(1.0 - hermitian_inner(z, w));
    k.radial = cmu * std::exp(expo * std::log(q)) * f;
    k.value = std::exp(k.prefactor_exponent) * k.radial;
    return k;
}

}  // namespace hyperball
