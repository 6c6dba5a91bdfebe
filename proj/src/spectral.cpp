#include "hyperball/spectral.hpp"

#include <cmath>

#include "hyperball/specfun.hpp"

namespace hyperball {

double continuous_coefficient(const Parameters& p) {
    return std::tgamma(static_cast<double>(p.n)) /
           (2.0 * std::pow(pi, p.n + 1) * std::pow(2.0, 2.0 * (p.nu - p.n)));
}

QuadResult continuous_spectral_integral(const Parameters& p, const SpectralMultiplier& m, double d,
                                        const QuadratureSpec& spec) {
    spec.validate();
    if (d < 0.0) throw DomainError("continuous_spectral_integral: distance must be nonnegative");
    const bool coincident = d < kCoincidentDistance;
    const double alpha = p.n - 1.0, beta = -p.nu;
    const double lmax = spec.lambda_max;

    auto body = [&](double l) {
        const double w = plancherel_weight(p, l);
        const cplx phi = coincident ? cplx(1.0) : jacobi_function(l, alpha, beta, d);
        return m.value(l) * w * phi.real();
    };
    const double freq = m.frequency + d;
    const double width = freq > 0.0 ? std::min(2.0, 2.0 * pi / freq) : 2.0;
    QuadResult res = integrate_panels(body, 0.0, lmax, width, spec.panel_points);
    const double scale = std::abs(res.value);

    if (m.tail.empty()) {
        // the integrand must already be negligible: probe one panel past lambda_max
        const QuadResult probe = integrate_panels(body, lmax, lmax + width, width, spec.panel_points);
        res.diag.nodes += probe.diag.nodes;
        res.diag.tail_estimate = std::abs(probe.value);
        if (res.diag.tail_estimate > std::max(spec.abs_tol, spec.rel_tol * scale))
            res.diag.fail("integrand not negligible beyond lambda_max");
        return res;
    }

    for (const TailTerm& term : m.tail) {
        if (coincident) {
            auto g = [&](double l) { return term.amplitude(l) * plancherel_weight(p, l); };
            const QuadResult t = integrate_oscillatory_tail(g, term.omega, lmax, spec);
            res.value += t.value;
            res.diag.merge(t.diag);
            continue;
        }
        auto outgoing = [&](double l) { return term.amplitude(l) * jacobi_outgoing_amplitude(l, alpha, beta, d); };
        auto incoming = [&](double l) {
            return term.amplitude(l) * std::conj(jacobi_outgoing_amplitude(l, alpha, beta, d));
        };
        const QuadResult t1 = integrate_oscillatory_tail(outgoing, term.omega + d, lmax, spec);
        const QuadResult t2 = integrate_oscillatory_tail(incoming, term.omega - d, lmax, spec);
        res.value += t1.value + t2.value;
        res.diag.merge(t1.diag);
        res.diag.merge(t2.diag);
    }
    return res;
}

}  // namespace hyperball
