#include "dualorder/real_linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace dualorder {

namespace {

// Count of singular values above the relative rank threshold.
int numerical_rank(const Vector& sigma, const Tolerances& tol) {
    if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
    const double cut = tol.rank_rel_tol * sigma[0];
    int r = 0;
    while (r < sigma.size() && sigma[r] > cut) ++r;
    return r;
}

// Complete a set of orthonormal columns to a full orthogonal matrix,
// keeping the given columns in place (up to rounding).
Matrix complete_basis(const Matrix& cols, Eigen::Index n) {
    if (cols.cols() == 0) return Matrix::Identity(n, n);
    Eigen::HouseholderQR<Matrix> qr(cols);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().topRows(cols.cols()).triangularView<Eigen::Upper>();
    // R is diagonal +-1 for orthonormal input; fix the signs.
    for (Eigen::Index j = 0; j < cols.cols(); ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

}  // namespace

SvdFactors svd(const Matrix& a, const Tolerances& tol) {
    if (!a.allFinite()) throw std::invalid_argument("svd: non-finite entry");
    Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success)
        throw NumericalError("svd: iteration failed to converge");
    SvdFactors f;
    f.u = dec.matrixU();
    f.sigma = dec.singularValues();
    f.v = dec.matrixV();
    f.rank = numerical_rank(f.sigma, tol);
    return f;
}

Matrix pinv(const Matrix& a, const Tolerances& tol) {
    const SvdFactors f = svd(a, tol);
    Vector inv = Vector::Zero(f.sigma.size());
    for (int i = 0; i < f.rank; ++i) inv[i] = 1.0 / f.sigma[i];
    return f.v.leftCols(f.sigma.size()) * inv.asDiagonal() *
           f.u.leftCols(f.sigma.size()).transpose();
}

int rank(const Matrix& a, const Tolerances& tol) { return svd(a, tol).rank; }

bool star_leq_real(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("star_leq_real: shape mismatch");
    const double scale = a.norm() * std::max(a.norm(), b.norm());
    return tol.near_zero((a.transpose() * a - a.transpose() * b).norm(), scale) &&
           tol.near_zero((a * a.transpose() - b * a.transpose()).norm(), scale);
}

StarDecomposition star_decompose(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    if (!star_leq_real(a, b, tol)) {
        const double r1 = (a.transpose() * a - a.transpose() * b).norm();
        const double r2 = (a * a.transpose() - b * a.transpose()).norm();
        throw OrderViolationError("star_decompose: inputs not star-ordered (residuals " +
                                  std::to_string(r1) + ", " + std::to_string(r2) + ")");
    }
    const Eigen::Index m = a.rows(), n = a.cols();
    const SvdFactors fa = svd(a, tol);
    const Eigen::Index ra = fa.rank;

    const Matrix d = b - a;
    Eigen::Index rd = 0;
    Matrix u2(m, 0), v2(n, 0);
    Vector t2(0);
    if (!tol.near_zero(d.norm(), b.norm())) {
        const SvdFactors fd = svd(d, tol);
        rd = fd.rank;
        // The residual's spaces must be orthogonal to a's; overlap means the
        // star order holds only up to tolerance abuse, so fail loudly.
        const Matrix u1 = fa.u.leftCols(ra);
        const Matrix v1 = fa.v.leftCols(ra);
        if (!tol.near_zero((u1.transpose() * d).norm(), d.norm()) ||
            !tol.near_zero((d * v1).norm(), d.norm()))
            throw OrderViolationError(
                "star_decompose: residual b-a overlaps the spaces of a");
        u2 = fd.u.leftCols(rd);
        v2 = fd.v.leftCols(rd);
        t2 = fd.sigma.head(rd);
    }

    StarDecomposition dec;
    Matrix u_lead(m, ra + rd);
    u_lead << fa.u.leftCols(ra), u2;
    Matrix v_lead(n, ra + rd);
    v_lead << fa.v.leftCols(ra), v2;
    dec.u = complete_basis(u_lead, m);
    dec.v = complete_basis(v_lead, n);
    dec.t1 = fa.sigma.head(ra);
    dec.t2 = t2;
    dec.split_rows = {ra, rd, m - ra - rd};
    dec.split_cols = {ra, rd, n - ra - rd};

    Matrix sa = Matrix::Zero(m, n);
    sa.topLeftCorner(ra, ra) = dec.t1.asDiagonal();
    Matrix sb = sa;
    sb.block(ra, ra, rd, rd) = dec.t2.asDiagonal();
    const double rec_a = (dec.u * sa * dec.v.transpose() - a).norm();
    const double rec_b = (dec.u * sb * dec.v.transpose() - b).norm();
    if (rec_a > 1e-9 * (1.0 + a.norm()) || rec_b > 1e-9 * (1.0 + b.norm()))
        throw OrderViolationError("star_decompose: canonical reconstruction failed");
    return dec;
}

BlockGrid to_blocks(const Matrix& x, const StarDecomposition& dec) {
    if (x.rows() != dec.u.rows() || x.cols() != dec.v.rows())
        throw DimensionError("to_blocks: shape inconsistent with decomposition");
    const Matrix y = dec.u.transpose() * x * dec.v;
    BlockGrid g;
    Eigen::Index r0 = 0;
    for (int i = 0; i < 3; ++i) {
        Eigen::Index c0 = 0;
        for (int j = 0; j < 3; ++j) {
            g[i][j] = y.block(r0, c0, dec.split_rows[i], dec.split_cols[j]);
            c0 += dec.split_cols[j];
        }
        r0 += dec.split_rows[i];
    }
    return g;
}

Matrix from_blocks(const BlockGrid& blocks, const StarDecomposition& dec) {
    const Eigen::Index m = dec.u.rows(), n = dec.v.rows();
    Matrix y(m, n);
    Eigen::Index r0 = 0;
    for (int i = 0; i < 3; ++i) {
        Eigen::Index c0 = 0;
        for (int j = 0; j < 3; ++j) {
            const Matrix& blk = blocks[i][j];
            if (blk.rows() != dec.split_rows[i] || blk.cols() != dec.split_cols[j])
                throw DimensionError("from_blocks: block shape inconsistent with splits");
            y.block(r0, c0, blk.rows(), blk.cols()) = blk;
            c0 += dec.split_cols[j];
        }
        r0 += dec.split_rows[i];
    }
    return dec.u * y * dec.v.transpose();
}

}  // namespace dualorder
