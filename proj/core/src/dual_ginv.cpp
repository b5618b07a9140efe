#include "dualorder/dual_ginv.hpp"

#include "dualorder/real_linalg.hpp"

namespace dualorder {

std::array<double, 4> penrose_residuals(const DualMatrix& x, const DualMatrix& cand) {
    if (cand.rows() != x.cols() || cand.cols() != x.rows())
        throw DimensionError("penrose_residuals: candidate shape must be the transpose of x");
    const DualMatrix ax = dm_mul(x, cand);
    const DualMatrix xa = dm_mul(cand, x);
    return {
        dm_norm(dm_add(dm_mul(ax, x), x, -1)),
        dm_norm(dm_add(dm_mul(xa, cand), cand, -1)),
        dm_norm(dm_add(ax, ax.transpose(), -1)),
        dm_norm(dm_add(xa, xa.transpose(), -1)),
    };
}

GinvResult mpdgi(const DualMatrix& x, const Tolerances& tol) {
    const Matrix ap = pinv(x.real(), tol);
    GinvResult res;
    res.correction = -ap * x.dual() * ap;
    res.value = DualMatrix(ap, res.correction);
    res.exists = true;
    res.route = GinvRoute::formula;
    res.penrose_residuals = penrose_residuals(x, *res.value);
    return res;
}

ExistenceReport dmpgi_existence(const DualMatrix& x, const Tolerances& tol) {
    const Matrix& a = x.real();
    const Matrix& a0 = x.dual();
    const Matrix ap = pinv(a, tol);
    const Matrix left = Matrix::Identity(a.rows(), a.rows()) - a * ap;
    const Matrix right = Matrix::Identity(a.cols(), a.cols()) - ap * a;

    ExistenceReport rep;
    rep.projector_residual = (left * a0 * right).norm();
    rep.exists = tol.near_zero(rep.projector_residual, a0.norm());

    Matrix block(2 * a.rows(), 2 * a.cols());
    block << a0, a, a, Matrix::Zero(a.rows(), a.cols());
    rep.rank_route_exists = rank(block, tol) == 2 * rank(a, tol);
    rep.routes_agree = rep.exists == rep.rank_route_exists;
    return rep;
}

bool dmpgi_exists(const DualMatrix& x, const Tolerances& tol) {
    return dmpgi_existence(x, tol).exists;
}

GinvResult dmpgi(const DualMatrix& x, const Tolerances& tol) {
    const ExistenceReport rep = dmpgi_existence(x, tol);
    GinvResult res;
    res.projector_residual = rep.projector_residual;
    res.route = GinvRoute::formula;
    if (!rep.exists) return res;

    const Matrix& a = x.real();
    const Matrix& a0 = x.dual();
    const Matrix ap = pinv(a, tol);
    const Matrix left = Matrix::Identity(a.rows(), a.rows()) - a * ap;
    const Matrix right = Matrix::Identity(a.cols(), a.cols()) - ap * a;
    res.correction = -ap * a0 * ap +
                     pinv(a.transpose() * a, tol) * a0.transpose() * left +
                     right * a0.transpose() * pinv(a * a.transpose(), tol);
    res.value = DualMatrix(ap, res.correction);
    res.exists = true;
    res.penrose_residuals = penrose_residuals(x, *res.value);
    return res;
}

GinvResult dmpgi_svd_route(const DualMatrix& x, const Tolerances& tol) {
    const ExistenceReport rep = dmpgi_existence(x, tol);
    GinvResult res;
    res.projector_residual = rep.projector_residual;
    res.route = GinvRoute::svd_blocks;
    if (!rep.exists) return res;

    const SvdFactors f = svd(x.real(), tol);
    const Eigen::Index m = x.rows(), n = x.cols(), a = f.rank;
    const Vector t1 = f.sigma.head(a);
    const Matrix g = f.u.transpose() * x.dual() * f.v;
    const Matrix a1 = g.topLeftCorner(a, a);
    const Matrix a2 = g.topRightCorner(a, n - a);
    const Matrix a3 = g.bottomLeftCorner(m - a, a);

    const Vector t1_inv = t1.cwiseInverse();
    const Vector t1_inv2 = t1_inv.cwiseProduct(t1_inv);
    Matrix sr = Matrix::Zero(n, m);
    sr.topLeftCorner(a, a) = t1_inv.asDiagonal();
    Matrix dr = Matrix::Zero(n, m);
    dr.topLeftCorner(a, a) =
        -(t1_inv.asDiagonal() * a1 * t1_inv.asDiagonal());
    dr.topRightCorner(a, m - a) = t1_inv2.asDiagonal() * a3.transpose();
    dr.bottomLeftCorner(n - a, a) = a2.transpose() * t1_inv2.asDiagonal();

    res.correction = f.v * dr * f.u.transpose();
    res.value = DualMatrix(f.v * sr * f.u.transpose(), res.correction);
    res.exists = true;
    res.penrose_residuals = penrose_residuals(x, *res.value);
    return res;
}

}  // namespace dualorder
