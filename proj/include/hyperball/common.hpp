#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperball {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Thrown on violated preconditions. `what()` names the constraint.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown at poles of gamma quotients or hypergeometric parameters.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when an evaluation point is outside a kernel's pointwise regime.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace hyperball
