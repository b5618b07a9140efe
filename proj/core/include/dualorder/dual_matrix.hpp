#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace dualorder {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when operand shapes do not conform.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a construction precondition (e.g. an order relation) is violated.
class OrderViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an underlying numerical kernel fails.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Comparison and rank thresholds used throughout the library.
struct Tolerances {
    double rank_rel_tol = 1e-10;  ///< relative to the largest singular value
    double eq_atol = 1e-10;
    double eq_rtol = 1e-9;

    /// True iff a residual of Frobenius norm `residual` is negligible at scale `scale`.
    bool near_zero(double residual, double scale) const {
        return residual <= eq_atol + eq_rtol * scale;
    }
};

/// An m-by-n matrix over the dual numbers, a + eps*a0 with eps^2 = 0,
/// stored as two equal-shape real matrices. Immutable after construction;
/// all entries are required to be finite.
class DualMatrix {
public:
    DualMatrix(Matrix real_part, Matrix dual_part)
        : real_(std::move(real_part)), dual_(std::move(dual_part)) {
        if (real_.rows() != dual_.rows() || real_.cols() != dual_.cols())
            throw DimensionError("DualMatrix: real and dual parts differ in shape");
        if (real_.size() == 0)
            throw DimensionError("DualMatrix: empty matrix");
        if (!real_.allFinite() || !dual_.allFinite())
            throw std::invalid_argument("DualMatrix: non-finite entry");
    }

    /// A real matrix viewed as a dual matrix with zero dual part.
    explicit DualMatrix(Matrix real_part)
        : DualMatrix(real_part, Matrix::Zero(real_part.rows(), real_part.cols())) {}

    Eigen::Index rows() const { return real_.rows(); }
    Eigen::Index cols() const { return real_.cols(); }

    const Matrix& real() const { return real_; }
    const Matrix& dual() const { return dual_; }

    DualMatrix transpose() const {
        return DualMatrix(real_.transpose(), dual_.transpose());
    }

    static DualMatrix zero(Eigen::Index m, Eigen::Index n) {
        return DualMatrix(Matrix::Zero(m, n), Matrix::Zero(m, n));
    }

    static DualMatrix identity(Eigen::Index n) {
        return DualMatrix(Matrix::Identity(n, n), Matrix::Zero(n, n));
    }

private:
    Matrix real_;
    Matrix dual_;
};

/// x + sign*y, componentwise on both parts. sign must be +1 or -1.
DualMatrix dm_add(const DualMatrix& x, const DualMatrix& y, int sign = +1);

/// Dual matrix product: the eps^2 cross term is dropped.
DualMatrix dm_mul(const DualMatrix& x, const DualMatrix& y);

DualMatrix dm_transpose(const DualMatrix& x);

/// Scale both parts by a real factor.
DualMatrix dm_scale(const DualMatrix& x, double factor);

/// Two-part Frobenius comparison: both the real and the dual differences must
/// fall below atol + rtol*max(norms).
bool dm_approx_eq(const DualMatrix& x, const DualMatrix& y, const Tolerances& tol);

/// Root-sum-square of the Frobenius norms of both parts.
double dm_norm(const DualMatrix& x);

}  // namespace dualorder
