#pragma once

#include <functional>
#include <vector>

#include "hyperball/kernels.hpp"
#include "hyperball/sweep.hpp"

namespace hyperball {

// Chebyshev interpolant of a radial kernel part k(d) on [d_min, d_max].
// Ball compositions sample a kernel at thousands of distances; the profile
// replaces each quadrature-backed evaluation by a Clenshaw sum.
// Variable::log_distance interpolates in s = log d, for kernels with a
// logarithmic singularity at d = 0 (the resolvent); then d_min > 0.
class RadialProfile {
public:
    enum class Variable { distance, log_distance };

    static RadialProfile build(const std::function<RadialValue(double)>& k, double d_min, double d_max, int nodes,
                               Variable var = Variable::distance, Execution mode = Execution::parallel);

    // Throws DomainError outside [d_min, d_max].
    cplx operator()(double d) const;

    double d_min() const { return d_min_; }
    double d_max() const { return d_max_; }
    // Largest |coefficient| among the last four, relative to the largest.
    double truncation_estimate() const { return truncation_; }
    const QuadDiagnostics& diagnostics() const { return diag_; }

private:
    double d_min_ = 0.0, d_max_ = 0.0;
    Variable var_ = Variable::distance;
    std::vector<cplx> coef_;
    double truncation_ = 0.0;
    QuadDiagnostics diag_;
};

}  // namespace hyperball
