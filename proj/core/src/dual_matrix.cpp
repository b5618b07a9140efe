#include "dualorder/dual_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace dualorder {

DualMatrix dm_add(const DualMatrix& x, const DualMatrix& y, int sign) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("dm_add: shape mismatch");
    if (sign != +1 && sign != -1)
        throw std::invalid_argument("dm_add: sign must be +1 or -1");
    const double s = static_cast<double>(sign);
    return DualMatrix(x.real() + s * y.real(), x.dual() + s * y.dual());
}

DualMatrix dm_mul(const DualMatrix& x, const DualMatrix& y) {
    if (x.cols() != y.rows())
        throw DimensionError("dm_mul: inner dimensions differ");
    return DualMatrix(x.real() * y.real(),
                      x.real() * y.dual() + x.dual() * y.real());
}

DualMatrix dm_transpose(const DualMatrix& x) { return x.transpose(); }

DualMatrix dm_scale(const DualMatrix& x, double factor) {
    return DualMatrix(factor * x.real(), factor * x.dual());
}

bool dm_approx_eq(const DualMatrix& x, const DualMatrix& y, const Tolerances& tol) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("dm_approx_eq: shape mismatch");
    const double real_scale = std::max(x.real().norm(), y.real().norm());
    const double dual_scale = std::max(x.dual().norm(), y.dual().norm());
    return tol.near_zero((x.real() - y.real()).norm(), real_scale) &&
           tol.near_zero((x.dual() - y.dual()).norm(), dual_scale);
}

double dm_norm(const DualMatrix& x) {
    return std::hypot(x.real().norm(), x.dual().norm());
}

}  // namespace dualorder
