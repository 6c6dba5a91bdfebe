#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>

#include "hyperball/common.hpp"
#include "hyperball/params.hpp"

namespace hyperball {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// A point of the open unit ball in C^n.
class BallPoint {
public:
    explicit BallPoint(CVec z);
    static BallPoint scalar(cplx z) { return BallPoint(CVec::Constant(1, z)); }
    static BallPoint origin(int n) { return BallPoint(CVec::Zero(n)); }

    const CVec& z() const { return z_; }
    int dim() const { return static_cast<int>(z_.size()); }
    double norm2() const { return z_.squaredNorm(); }
    cplx operator[](int k) const { return z_(k); }

private:
    CVec z_;
};

// A point of the unit sphere S^{2n-1}, |ω| = 1 to 1e−12.
class BoundaryPoint {
public:
    explicit BoundaryPoint(CVec omega);
    static BoundaryPoint scalar(cplx omega) { return BoundaryPoint(CVec::Constant(1, omega)); }

    const CVec& omega() const { return omega_; }
    int dim() const { return static_cast<int>(omega_.size()); }

private:
    CVec omega_;
};

// Element of SU(1,n) in block form [[A, B], [C, D]].
class GroupElement {
public:
    explicit GroupElement(CMat g);
    static GroupElement identity(int n) { return GroupElement(CMat::Identity(n + 1, n + 1)); }

    const CMat& matrix() const { return g_; }
    int dim() const { return static_cast<int>(g_.rows()) - 1; }
    auto A() const { return g_.topLeftCorner(dim(), dim()); }
    auto B() const { return g_.topRightCorner(dim(), 1); }
    auto C() const { return g_.bottomLeftCorner(1, dim()); }
    cplx D() const { return g_(dim(), dim()); }

    GroupElement inverse() const;  // J g* J
    GroupElement operator*(const GroupElement& o) const { return GroupElement(g_ * o.g_); }

private:
    CMat g_;
};

struct GeneralizedLaplacianParams {
    double alpha = 0.0;
    double beta = 0.0;
    int n = 1;
    double sigma2() const { return (alpha + beta + n) * (alpha + beta + n); }
};

cplx hermitian_inner(const CVec& z, const CVec& w);
inline cplx hermitian_inner(const BallPoint& z, const BallPoint& w) { return hermitian_inner(z.z(), w.z()); }

// |1−⟨z,w⟩|² / ((1−|z|²)(1−|w|²)) = cosh² d(z,w).
double bergman_cosh2(const BallPoint& z, const BallPoint& w);
double bergman_distance(const BallPoint& z, const BallPoint& w);

// sinh² d(z,w) without the cancellation in cosh² − 1.
double bergman_sinh2(const BallPoint& z, const BallPoint& w);

// (Az+B)(Cz+D)⁻¹ and the automorphy factor Cz+D.
BallPoint mobius_act(const GroupElement& g, const BallPoint& z);
cplx automorphy_factor(const GroupElement& g, const BallPoint& z);

// g_z, the transvection with g_z·0 = z.
GroupElement transvection(const BallPoint& z);

// transvection(z) · diag(U, e^{iθ}), U Haar-unitary, det corrected to 1; |z| ≤ max_radius.
GroupElement random_group_element(int n, std::mt19937_64& rng, double max_radius = 0.8);
BallPoint random_ball_point(int n, std::mt19937_64& rng, double max_radius = 0.8);

using BallField = std::function<cplx(const CVec&)>;

struct FdOptions {
    double h = 1e-3;
    bool richardson = false;  // combine h and h/2
};

// Δ_ν f(z) and Δ_{α,β} f(z) by central differences in the 2n real coordinates.
// Throws DomainError when the stencil leaves the ball.
cplx apply_delta_nu(const Parameters& p, const BallField& f, const BallPoint& z, FdOptions fd = {});
cplx apply_delta_alpha_beta(const GeneralizedLaplacianParams& gp, const BallField& f, const BallPoint& z,
                            FdOptions fd = {});

}  // namespace hyperball
