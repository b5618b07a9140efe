#pragma once

#include "dualorder/dual_matrix.hpp"

#include <array>
#include <optional>

namespace dualorder {

enum class GinvRoute { formula, svd_blocks };

/// Outcome of a dual generalized inverse computation. For the MPDGI `exists`
/// is always true; for the DMPGI a false verdict carries no value and the
/// projector residual that decided it.
struct GinvResult {
    std::optional<DualMatrix> value;              ///< n x m inverse, absent when exists=false
    bool exists = false;
    Matrix correction;                            ///< the R (or R_p) term actually used
    std::array<double, 4> penrose_residuals{};    ///< dual Penrose defects of value
    GinvRoute route = GinvRoute::formula;
    double projector_residual = 0.0;              ///< ||(I-AA+)A0(I-A+A)||_F
};

/// Diagnostics of the DMPGI existence test: the projector condition decides,
/// the block-rank condition is an independent cross-check.
struct ExistenceReport {
    bool exists = false;              ///< projector-route verdict (authoritative)
    double projector_residual = 0.0;
    bool rank_route_exists = false;   ///< rk([A0 A; A 0]) == 2 rk(A)
    bool routes_agree = true;
};

/// Moore-Penrose dual generalized inverse A+ - eps A+ A0 A+. Always exists.
GinvResult mpdgi(const DualMatrix& x, const Tolerances& tol);

ExistenceReport dmpgi_existence(const DualMatrix& x, const Tolerances& tol);

bool dmpgi_exists(const DualMatrix& x, const Tolerances& tol);

/// Dual Moore-Penrose generalized inverse. When it does not exist the result
/// has exists=false and no value; that is a value, not an error.
GinvResult dmpgi(const DualMatrix& x, const Tolerances& tol);

/// Same inverse computed through the SVD block pattern instead of the
/// compact correction formula; used as a cross-check route.
GinvResult dmpgi_svd_route(const DualMatrix& x, const Tolerances& tol);

/// Frobenius defects (real and dual parts jointly) of the four dual Penrose
/// equations for candidate inverse `cand` of `x`.
std::array<double, 4> penrose_residuals(const DualMatrix& x, const DualMatrix& cand);

}  // namespace dualorder
