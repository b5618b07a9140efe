#pragma once

#include "dualorder/dual_ginv.hpp"
#include "dualorder/dual_matrix.hpp"
#include "dualorder/real_linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dualorder {

enum class Relation { star_real, d_star, t_star, p_order, p_star };
enum class Route { definition, characterization, canonical_form };

/// Structured verdict for one order predicate. The counterexamples of the
/// theory are distinguished by which condition fails, so every residual is
/// kept by name rather than collapsed into the boolean.
struct OrderReport {
    Relation relation;
    bool holds = false;
    Route route = Route::definition;
    std::vector<std::pair<std::string, double>> condition_residuals;
    std::vector<std::string> prerequisite_failures;  ///< e.g. "DMPGI of B absent"
    std::vector<std::string> diagnostics;            ///< cross-route disagreements
};

/// T-star: A^T A = A^T B and A A^T = B A^T in dual arithmetic.
OrderReport t_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// D-star via the definition: A+ A = A+ B and A A+ = B A+ with A+ the DMPGI.
/// Requires both DMPGIs to exist.
OrderReport d_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// D-star via the three-condition characterization over the correction term R.
OrderReport d_star_leq_char(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// D-star via membership in the canonical simultaneous block form.
OrderReport d_star_leq_canonical(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// P-order via the MPDGI; always defined, not antisymmetric in general.
OrderReport p_order_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// P-order via its star-order + correction characterization.
OrderReport p_order_leq_char(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// P-star: P-order plus existence of both DMPGIs. The four-transpose-identity
/// characterization is evaluated as a cross-check; disagreement is recorded
/// in diagnostics, never reconciled silently.
OrderReport p_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// P-star via membership in the canonical block form.
OrderReport p_star_leq_canonical(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// The four transpose identities equivalent to P-star:
/// A^T A = A^T B, A A^T = B A^T, A^T A0 = A^T B0, A0 A^T = B0 A^T.
bool p_star_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// A0^T A = A0^T B and A A0^T = B A0^T (the condition separating P-star from
/// D-star, and characterizing P-star(A+, B+) given D-star).
bool cross_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// B B0^T A = A B0^T A and A B0^T B = A B0^T A (characterizes D-star of the
/// MPDGIs given D-star of the pair).
bool mpdgi_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// Canonical membership in the form shared by D-star and P-star
/// simultaneously (coupling blocks A2 = A4 = 0).
OrderReport both_orders_canonical(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// Block condition A4 T1 + T2 A2^T = 0 and A4^T T2 + T1 A2 = 0, evaluated in
/// the canonical basis of the pair (characterizes P-star(A+, B+) given P-star).
bool dagger_pstar_block_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol);

/// Verdicts of the dagger-monotonicity law: a <= b under D-star iff a+ <= b+.
struct MonotoneReport {
    OrderReport direct;    ///< d_star_leq(a, b)
    OrderReport inverses;  ///< d_star_leq(a+, b+)
    bool agree = false;
    std::vector<std::string> prerequisite_failures;
};

MonotoneReport check_dagger_monotone(const DualMatrix& a, const DualMatrix& b,
                                     const Tolerances& tol);

/// Residuals of the sum/difference inverse identities
/// (B+A)+ = B+ - (1/2)A+ and (B-A)+ = B+ - A+ under D-star.
struct SumDiffReport {
    double sum_exist_residual = 0.0;   ///< projector residual of b+a
    double diff_exist_residual = 0.0;  ///< projector residual of b-a
    double sum_identity_residual = 0.0;
    double diff_identity_residual = 0.0;
    bool all_hold = false;
};

SumDiffReport check_sum_diff_dmpgi(const DualMatrix& a, const DualMatrix& b,
                                   const Tolerances& tol);

/// Every relation plus the extra transpose conditions and derived-pair
/// verdicts used by the relation theorems. Consistency across the rows is
/// asserted by the verification harness, not here.
struct RelationSummary {
    OrderReport star_real;
    OrderReport d_star;
    OrderReport t_star;
    OrderReport p_order;
    OrderReport p_star;
    bool cond_cross_transpose = false;  ///< A0^T A = A0^T B and A A0^T = B A0^T
    bool cond_six_transpose = false;    ///< all six identities combined
    bool cond_mpdgi_transpose = false;  ///< B B0^T A = A B0^T A and A B0^T B = A B0^T A
    std::optional<bool> d_star_of_mpdgis;
    std::optional<bool> p_star_of_mpdgis;
    std::optional<bool> p_star_of_dmpgis;  ///< only when both DMPGIs exist
};

RelationSummary relation_matrix(const DualMatrix& a, const DualMatrix& b,
                                const Tolerances& tol);

}  // namespace dualorder
