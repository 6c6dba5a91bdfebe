#include "hyperball/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <vector>

namespace hyperball {

namespace {

CMat j_matrix(int n) {
    CMat J = CMat::Identity(n + 1, n + 1);
    J(n, n) = -1.0;
    return J;
}

}  // namespace

BallPoint::BallPoint(CVec z) : z_(std::move(z)) {
    if (z_.size() < 1) throw DomainError("BallPoint: dimension must be positive");
    if (!(z_.squaredNorm() < 1.0)) throw DomainError("BallPoint: |z| must be < 1");
}

BoundaryPoint::BoundaryPoint(CVec omega) : omega_(std::move(omega)) {
    if (omega_.size() < 1) throw DomainError("BoundaryPoint: dimension must be positive");
    if (std::abs(omega_.norm() - 1.0) >= 1e-12) throw DomainError("BoundaryPoint: |omega| must be 1");
}

GroupElement::GroupElement(CMat g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() < 2) throw DomainError("GroupElement: matrix must be (n+1)x(n+1)");
    const int n = dim();
    const CMat J = j_matrix(n);
    const double defect = (g_.adjoint() * J * g_ - J).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, g_.cwiseAbs2().maxCoeff());
    if (defect > 1e-12 * scale) throw DomainError("GroupElement: g*Jg = J violated");
    if (std::abs(g_.determinant() - 1.0) > 1e-10 * scale) throw DomainError("GroupElement: det g must be 1");
}

GroupElement GroupElement::inverse() const {
    const CMat J = j_matrix(dim());
    return GroupElement(J * g_.adjoint() * J);
}

cplx hermitian_inner(const CVec& z, const CVec& w) {
    if (z.size() != w.size()) throw DomainError("hermitian_inner: dimension mismatch");
    // Eigen's dot conjugates its left operand.
    return w.dot(z);
}

double bergman_cosh2(const BallPoint& z, const BallPoint& w) {
    return std::norm(1.0 - hermitian_inner(z, w)) / ((1.0 - z.norm2()) * (1.0 - w.norm2()));
}

double bergman_distance(const BallPoint& z, const BallPoint& w) {
    // asinh √(sinh²d) instead of acosh √(cosh²d): no clamp needed and full accuracy near d = 0
    return std::asinh(std::sqrt(bergman_sinh2(z, w)));
}

double bergman_sinh2(const BallPoint& z, const BallPoint& w) {
    // |1−⟨z,w⟩|² − (1−|z|²)(1−|w|²) = |z−w|² + |⟨z,w⟩|² − |z|²|w|²
    const double num = (z.z() - w.z()).squaredNorm() + std::norm(hermitian_inner(z, w)) - z.norm2() * w.norm2();
    return std::max(0.0, num) / ((1.0 - z.norm2()) * (1.0 - w.norm2()));
}

cplx automorphy_factor(const GroupElement& g, const BallPoint& z) {
    if (g.dim() != z.dim()) throw DomainError("mobius_act: dimension mismatch");
    return (g.C() * z.z())(0, 0) + g.D();
}

BallPoint mobius_act(const GroupElement& g, const BallPoint& z) {
    const cplx den = automorphy_factor(g, z);
    CVec out = (g.A() * z.z() + g.B()) / den;
    if (!(out.squaredNorm() < 1.0)) throw DomainError("mobius_act: image left the ball; malformed group element");
    return BallPoint(std::move(out));
}

GroupElement transvection(const BallPoint& z) {
    const int n = z.dim();
    const CVec& v = z.z();
    const double r2 = z.norm2();
    // (I − zz*)^{−1/2} from the hermitian eigendecomposition.
    const CMat M = CMat::Identity(n, n) - v * v.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es(M);
    const CMat A = es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                   es.eigenvectors().adjoint();
    const double d = 1.0 / std::sqrt(1.0 - r2);
    CMat g(n + 1, n + 1);
    g.topLeftCorner(n, n) = A;
    g.topRightCorner(n, 1) = v * d;
    g.bottomLeftCorner(1, n) = v.adjoint() * A;
    g(n, n) = d;
    return GroupElement(std::move(g));
}

BallPoint random_ball_point(int n, std::mt19937_64& rng, double max_radius) {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif;
    CVec v(n);
    for (int k = 0; k < n; ++k) v(k) = cplx(gauss(rng), gauss(rng));
    v /= v.norm();
    // uniform in the Euclidean ball of radius max_radius
    const double r = max_radius * std::pow(unif(rng), 1.0 / (2.0 * n));
    return BallPoint(v * r);
}

GroupElement random_group_element(int n, std::mt19937_64& rng, double max_radius) {
    std::normal_distribution<double> gauss;
    CMat G(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) G(i, k) = cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMat> qr(G);
    CMat Q = qr.householderQ();
    const CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
    // phase-fix the columns so Q is Haar distributed
    for (int k = 0; k < n; ++k) {
        const cplx d = R(k, k);
        if (std::abs(d) > 0) Q.col(k) *= d / std::abs(d);
    }
    const cplx detq = Q.determinant();
    CMat K = CMat::Identity(n + 1, n + 1);
    K.topLeftCorner(n, n) = Q;
    K(n, n) = std::conj(detq) / std::abs(detq);
    const BallPoint a = random_ball_point(n, rng, max_radius);
    return transvection(a) * GroupElement(std::move(K));
}

namespace {

// Central-difference derivatives in the real coordinates (x_1, y_1, …, x_n, y_n).
struct Derivatives {
    cplx f0;
    std::vector<cplx> grad;                // ∂_a f
    std::vector<std::vector<cplx>> hess;  // ∂_a ∂_b f
};

Derivatives real_derivatives(const BallField& f, const CVec& z, double h) {
    const int n = static_cast<int>(z.size());
    const int m = 2 * n;
    auto shifted = [&](int a, double sa, int b, double sb) {
        CVec p = z;
        if (a >= 0) p(a / 2) += (a % 2 == 0 ? cplx(sa, 0.0) : cplx(0.0, sa));
        if (b >= 0) p(b / 2) += (b % 2 == 0 ? cplx(sb, 0.0) : cplx(0.0, sb));
        if (!(p.squaredNorm() < 1.0)) throw DomainError("finite-difference stencil leaves the ball");
        return p;
    };
    // reject up front if the widest stencil point can leave the ball
    if (!(z.norm() + 2.0 * h < 1.0)) throw DomainError("finite-difference stencil leaves the ball");

    Derivatives d;
    d.f0 = f(z);
    d.grad.assign(m, 0.0);
    d.hess.assign(m, std::vector<cplx>(m, 0.0));
    for (int a = 0; a < m; ++a) {
        const cplx fp = f(shifted(a, h, -1, 0));
        const cplx fm = f(shifted(a, -h, -1, 0));
        d.grad[a] = (fp - fm) / (2.0 * h);
        d.hess[a][a] = (fp - 2.0 * d.f0 + fm) / (h * h);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const cplx v = (f(shifted(a, h, b, h)) - f(shifted(a, h, b, -h)) - f(shifted(a, -h, b, h)) +
                            f(shifted(a, -h, b, -h))) /
                           (4.0 * h * h);
            d.hess[a][b] = d.hess[b][a] = v;
        }
    return d;
}

// 4(1−|z|²){Σ(δ_ij − z_i z̄_j)∂²/∂z_i∂z̄_j + α Σ z_j ∂_j + β Σ z̄_j ∂̄_j − αβ} f at step h.
cplx delta_ab_once(double alpha, double beta, const BallField& f, const CVec& z, double h) {
    const int n = static_cast<int>(z.size());
    const Derivatives d = real_derivatives(f, z, h);
    auto X = [](int k) { return 2 * k; };
    auto Y = [](int k) { return 2 * k + 1; };
    cplx second = 0.0, holo = 0.0, antiholo = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx dzdzb = 0.25 * (d.hess[X(i)][X(j)] + d.hess[Y(i)][Y(j)] +
                                       I * (d.hess[X(i)][Y(j)] - d.hess[Y(i)][X(j)]));
            const cplx coef = (i == j ? 1.0 : 0.0) - z(i) * std::conj(z(j));
            second += coef * dzdzb;
        }
        const cplx dz = 0.5 * (d.grad[X(i)] - I * d.grad[Y(i)]);
        const cplx dzb = 0.5 * (d.grad[X(i)] + I * d.grad[Y(i)]);
        holo += z(i) * dz;
        antiholo += std::conj(z(i)) * dzb;
    }
    const double w = 1.0 - z.squaredNorm();
    return 4.0 * w * (second + alpha * holo + beta * antiholo - alpha * beta * d.f0);
}

cplx delta_ab(double alpha, double beta, const BallField& f, const CVec& z, FdOptions fd) {
    if (!(fd.h > 0.0)) throw DomainError("finite-difference step must be positive");
    const cplx coarse = delta_ab_once(alpha, beta, f, z, fd.h);
    if (!fd.richardson) return coarse;
    const cplx fine = delta_ab_once(alpha, beta, f, z, fd.h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

cplx apply_delta_nu(const Parameters& p, const BallField& f, const BallPoint& z, FdOptions fd) {
    if (z.dim() != p.n) throw DomainError("apply_delta_nu: dimension mismatch");
    return delta_ab(0.0, -p.nu, f, z.z(), fd);
}

cplx apply_delta_alpha_beta(const GeneralizedLaplacianParams& gp, const BallField& f, const BallPoint& z,
                            FdOptions fd) {
    if (z.dim() != gp.n) throw DomainError("apply_delta_alpha_beta: dimension mismatch");
    return delta_ab(gp.alpha, gp.beta, f, z.z(), fd);
}

}  // namespace hyperball
