#include "hyperball/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <stdexcept>

#include "hyperball/accumulate.hpp"

namespace hyperball {

namespace {

// GSL's default handler aborts; every call site here checks status instead.
const bool gsl_handler_disabled = [] {
    gsl_set_error_handler_off();
    return true;
}();

bool is_real(cplx z, double tol = 1e-13) { return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z)); }

// Σ_k (a)_k (b)_k / ((c)_k k!) x^k for |x| < 1 or a terminating numerator.
SeriesResult maclaurin(cplx a, cplx b, cplx c, double x) {
    SeriesResult r;
    if (x == 0.0) {
        r.value = 1.0;
        return r;
    }
    ComplexSum sum;
    cplx term = 1.0;
    sum.add(term);
    long k = 0;
    for (; k < kSeriesTermCap; ++k) {
        const double kk = static_cast<double>(k);
        const cplx num = (a + kk) * (b + kk);
        if (num == cplx(0.0)) {
            r.value = sum.value();
            r.terms = k + 1;
            return r;
        }
        const cplx ratio = num / ((c + kk) * (kk + 1.0)) * x;
        term *= ratio;
        sum.add(term);
        const double rho = std::abs(ratio);
        if (rho < 1.0) {
            // geometric bound on the remainder once terms are shrinking
            const double tail = std::abs(term) * rho / (1.0 - rho);
            if (tail <= kSeriesRelTol * std::abs(sum.value())) break;
        }
    }
    r.value = sum.value();
    r.terms = k + 1;
    r.converged = k < kSeriesTermCap;
    return r;
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double re = z.real();
    return re < tol && std::abs(re - std::round(re)) < tol;
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    gsl_sf_result lnr, arg;
    const int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (status != GSL_SUCCESS) throw PoleError(std::string("log_gamma: ") + gsl_strerror(status));
    return {lnr.val, arg.val};
}

SeriesResult gauss_2f1(const HypergeometricArgs& args) {
    const auto [a, b, c, x] = args;
    if (!(x < 1.0)) throw DomainError("gauss_2f1: argument must be < 1");
    const bool a_term = is_nonpositive_integer(a);
    const bool b_term = is_nonpositive_integer(b);
    if (is_nonpositive_integer(c)) {
        // allowed only when the numerator terminates before the pole
        const double cpole = -std::round(c.real());
        const bool ok = (a_term && -std::round(a.real()) < cpole) || (b_term && -std::round(b.real()) < cpole);
        if (!ok) throw PoleError("gauss_2f1: c is a non-positive integer");
    }
    if (x == 0.0) return {1.0, 1, true};
    if (x > 0.0) return maclaurin(a, b, c, x);

    // x < −1 with a−b off the integers: the 1/x connection formula. Pfaff's series
    // at y = x/(x−1) > 1/2 loses digits to cancellation when Im(a), Im(b) are large.
    const cplx ab = a - b;
    if (x < -1.0 && !a_term && !b_term && std::abs(ab - std::round(ab.real())) > 1e-6) {
        const cplx lgc = log_gamma(c);
        const double logmx = std::log(-x);
        auto branch = [&](cplx p, cplx q) -> SeriesResult {
            // Γ(c)Γ(q−p)/(Γ(q)Γ(c−p)) (−x)^{−p} ₂F₁(p, p−c+1; p−q+1; 1/x)
            if (is_nonpositive_integer(q) || is_nonpositive_integer(c - p)) return {0.0, 0, true};
            SeriesResult r = maclaurin(p, p - c + 1.0, p - q + 1.0, 1.0 / x);
            r.value *= std::exp(lgc + log_gamma(q - p) - log_gamma(q) - log_gamma(c - p) - p * logmx);
            return r;
        };
        const SeriesResult r1 = branch(a, b), r2 = branch(b, a);
        return {r1.value + r2.value, r1.terms + r2.terms, r1.converged && r2.converged};
    }

    // Pfaff: ₂F₁(a,b;c;x) = (1−x)^{−a} ₂F₁(a, c−b; c; x/(x−1)), or the a↔b mirror.
    const double y = x / (x - 1.0);
    const double logw = std::log1p(-x);
    if (b_term && !a_term) {
        SeriesResult r = maclaurin(c - a, b, c, y);
        r.value *= std::exp(-b * logw);
        return r;
    }
    SeriesResult r = maclaurin(a, c - b, c, y);
    r.value *= std::exp(-a * logw);
    return r;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double x) {
    const SeriesResult r = gauss_2f1({a, b, c, x});
    if (!r.converged) throw std::runtime_error("hyp2f1: series did not converge within the term cap");
    return r.value;
}

double jacobi_polynomial(int j, double alpha, double beta, double y) {
    if (j < 0) throw DomainError("jacobi_polynomial: degree must be nonnegative");
    const double u = (1.0 - y) / 2.0;
    const double ab1 = j + alpha + beta + 1.0;
    CompensatedSum sum;
    double term = 1.0;
    sum.add(term);
    for (int k = 0; k < j; ++k) {
        term *= (k - j) * (ab1 + k) / ((alpha + 1.0 + k) * (k + 1.0)) * u;
        sum.add(term);
    }
    return pochhammer(alpha + 1.0, j) / std::tgamma(j + 1.0) * sum.value();
}

cplx jacobi_c(cplx lambda, double alpha, double beta) {
    const double rho = alpha + beta + 1.0;
    const cplx il = I * lambda;
    const cplx lg = (rho - il) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(il) -
                    log_gamma((il + rho) / 2.0) - log_gamma((il + alpha - beta + 1.0) / 2.0);
    return std::exp(lg);
}

SeriesResult jacobi_hc_series(double lambda, double alpha, double beta, double t) {
    if (!(t > 0.0)) throw DomainError("jacobi_hc_series: t must be positive");
    if (lambda == 0.0) throw DomainError("jacobi_hc_series: lambda must be nonzero");
    const double rho = alpha + beta + 1.0;
    const cplx il(0.0, lambda);
    const double q = std::exp(-2.0 * t);
    const double even_coef = 4.0 * rho;
    const double odd_coef = 4.0 * (alpha - beta);

    // Γ_k = −Σ_{m=1}^k B_m μ_{k−m} Γ_{k−m} / (4k(k−iλ)), μ_i = iλ−ρ−2i,
    // B_m = 4ρ (m even) or 4(α−β) (m odd); parity sums make it O(K).
    cplx par_sum[2] = {il - rho, 0.0};  // Σ μ_i Γ_i over i < k, by parity of i
    ComplexSum sum;
    sum.add(1.0);
    double qk = 1.0;
    int quiet = 0;
    SeriesResult r;
    long k = 1;
    for (; k < kSeriesTermCap; ++k) {
        const int same = static_cast<int>(k & 1);
        const cplx s = even_coef * par_sum[same] + odd_coef * par_sum[1 - same];
        const double kd = static_cast<double>(k);
        const cplx gk = -s / (4.0 * kd * (kd - il));
        qk *= q;
        const cplx term = gk * qk;
        sum.add(term);
        par_sum[same] += (il - rho - 2.0 * kd) * gk;
        if (std::abs(term) <= 1e-17 * std::abs(sum.value()))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) break;
    }
    r.value = sum.value();
    r.terms = k + 1;
    r.converged = k < kSeriesTermCap;
    return r;
}

cplx jacobi_outgoing_amplitude(double lambda, double alpha, double beta, double t) {
    const double rho = alpha + beta + 1.0;
    const SeriesResult s = jacobi_hc_series(lambda, alpha, beta, t);
    if (!s.converged) throw std::runtime_error("jacobi_outgoing_amplitude: expansion did not converge");
    return std::exp(-rho * t) * s.value / jacobi_c(-lambda, alpha, beta);
}

cplx jacobi_function(cplx lambda, double alpha, double beta, double t) {
    if (t < 0.0) throw DomainError("jacobi_function: t must be nonnegative");
    if (is_nonpositive_integer(alpha + 1.0)) throw DomainError("jacobi_function: alpha+1 must not be a non-positive integer");
    if (t == 0.0) return 1.0;
    const double rho = alpha + beta + 1.0;
    const cplx a = (rho + I * lambda) / 2.0;
    const cplx b = (rho - I * lambda) / 2.0;
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    const double lam = std::abs(lambda.real());
    if (!terminating && is_real(lambda) && lam * std::tanh(t) > kJacobiAsymptoticSwitch) {
        const SeriesResult s = jacobi_hc_series(lam, alpha, beta, t);
        if (!s.converged) throw std::runtime_error("jacobi_function: expansion did not converge");
        const cplx phi = jacobi_c(lam, alpha, beta) * std::exp(cplx(-rho, lam) * t) * s.value;
        return 2.0 * phi.real();
    }
    const double sh = std::sinh(t);
    return hyp2f1(a, b, alpha + 1.0, -sh * sh);
}

cplx harish_chandra_c(const Parameters& p, double lambda) {
    if (lambda == 0.0) throw PoleError("harish_chandra_c: pole at lambda = 0");
    return jacobi_c(lambda, p.n - 1.0, -p.nu);
}

double plancherel_weight(const Parameters& p, double lambda) {
    if (lambda == 0.0) return 0.0;
    const double rho = p.n - p.nu;
    const cplx il(0.0, lambda);
    const double re_log_c = rho * std::log(2.0) + gsl_sf_lngamma(static_cast<double>(p.n)) +
                            log_gamma(il).real() - log_gamma((il + rho) / 2.0).real() -
                            log_gamma((il + (p.n + p.nu)) / 2.0).real();
    return std::exp(-2.0 * re_log_c);
}

}  // namespace hyperball
