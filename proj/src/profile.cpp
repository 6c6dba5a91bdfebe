#include "hyperball/profile.hpp"

#include <algorithm>
#include <cmath>

#include "hyperball/accumulate.hpp"

namespace hyperball {

RadialProfile RadialProfile::build(const std::function<RadialValue(double)>& k, double d_min, double d_max,
                                   int nodes, Variable var, Execution mode) {
    if (nodes < 4) throw DomainError("RadialProfile: need at least 4 nodes");
    if (!(d_max > d_min) || d_min < 0.0) throw DomainError("RadialProfile: need 0 <= d_min < d_max");
    if (var == Variable::log_distance && !(d_min > 0.0))
        throw DomainError("RadialProfile: log_distance needs d_min > 0");

    RadialProfile prof;
    prof.d_min_ = d_min;
    prof.d_max_ = d_max;
    prof.var_ = var;
    const double a = var == Variable::log_distance ? std::log(d_min) : d_min;
    const double b = var == Variable::log_distance ? std::log(d_max) : d_max;

    std::vector<double> x(nodes);
    for (int i = 0; i < nodes; ++i) x[i] = std::cos(pi * (i + 0.5) / nodes);
    const std::vector<RadialValue> vals = map_indices<RadialValue>(
        nodes,
        [&](std::size_t i) {
            const double s = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
            return k(var == Variable::log_distance ? std::exp(s) : s);
        },
        mode);
    for (const RadialValue& v : vals) prof.diag_.merge(v.diagnostics);

    prof.coef_.assign(nodes, cplx(0.0));
    for (int m = 0; m < nodes; ++m) {
        ComplexSum s;
        for (int i = 0; i < nodes; ++i) s.add(vals[i].value * std::cos(pi * m * (i + 0.5) / nodes));
        prof.coef_[m] = (m == 0 ? 1.0 : 2.0) / nodes * s.value();
    }
    double big = 0.0, tail = 0.0;
    for (int m = 0; m < nodes; ++m) {
        big = std::max(big, std::abs(prof.coef_[m]));
        if (m >= nodes - 4) tail = std::max(tail, std::abs(prof.coef_[m]));
    }
    prof.truncation_ = big > 0.0 ? tail / big : 0.0;
    return prof;
}

cplx RadialProfile::operator()(double d) const {
    const double tol = 1e-12 * std::max(1.0, d_max_);
    if (d < d_min_ - tol || d > d_max_ + tol) throw DomainError("RadialProfile: distance outside the sampled range");
    d = std::clamp(d, d_min_, d_max_);
    const double a = var_ == Variable::log_distance ? std::log(d_min_) : d_min_;
    const double b = var_ == Variable::log_distance ? std::log(d_max_) : d_max_;
    const double s = var_ == Variable::log_distance ? std::log(d) : d;
    const double x = (2.0 * s - a - b) / (b - a);
    cplx b1 = 0.0, b2 = 0.0;
    for (int m = static_cast<int>(coef_.size()) - 1; m >= 1; --m) {
        const cplx t = 2.0 * x * b1 - b2 + coef_[m];
        b2 = b1;
        b1 = t;
    }
    return x * b1 - b2 + coef_[0];
}

}  // namespace hyperball
