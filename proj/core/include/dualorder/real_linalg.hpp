#pragma once

#include "dualorder/dual_matrix.hpp"

#include <array>

namespace dualorder {

/// Full SVD A = U * diag(sigma) * V^T with the numerical rank attached.
struct SvdFactors {
    Matrix u;       ///< m x m orthogonal
    Vector sigma;   ///< length min(m, n), nonincreasing, nonnegative
    Matrix v;       ///< n x n orthogonal
    int rank = 0;   ///< count of sigma entries above rank_rel_tol * sigma[0]
};

using BlockGrid = std::array<std::array<Matrix, 3>, 3>;

/// Simultaneous canonical decomposition of a star-ordered real pair (a, b):
/// a = U diag(t1, 0, 0) V^T and b = U diag(t1, t2, 0) V^T, with row split
/// (ra, rk(b)-ra, m-rk(b)) and column split (ra, rk(b)-ra, n-rk(b)).
struct StarDecomposition {
    Matrix u;   ///< m x m orthogonal
    Matrix v;   ///< n x n orthogonal
    Vector t1;  ///< positive diagonal entries, length rk(a)
    Vector t2;  ///< positive diagonal entries, length rk(b) - rk(a)
    std::array<Eigen::Index, 3> split_rows;
    std::array<Eigen::Index, 3> split_cols;
};

SvdFactors svd(const Matrix& a, const Tolerances& tol);

/// Moore-Penrose inverse, inverting only singular values above the rank threshold.
Matrix pinv(const Matrix& a, const Tolerances& tol);

int rank(const Matrix& a, const Tolerances& tol);

/// Real star order: A^T A = A^T B and A A^T = B A^T within tolerance.
bool star_leq_real(const Matrix& a, const Matrix& b, const Tolerances& tol);

/// Builds the shared orthogonal basis exposing the diagonal blocks of a
/// star-ordered pair. Throws OrderViolationError when the pair is not
/// star-ordered within tolerance.
StarDecomposition star_decompose(const Matrix& a, const Matrix& b, const Tolerances& tol);

/// Partition U^T x V by the decomposition's splits into a 3x3 grid.
BlockGrid to_blocks(const Matrix& x, const StarDecomposition& dec);

/// Reassemble U * blocks * V^T; inverse of to_blocks up to rounding.
Matrix from_blocks(const BlockGrid& blocks, const StarDecomposition& dec);

}  // namespace dualorder
