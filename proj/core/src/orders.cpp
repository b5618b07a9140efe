#include "dualorder/orders.hpp"

#include <algorithm>
#include <cmath>

namespace dualorder {

namespace {

// Record ||lhs - rhs|| under `name` and test it against the shared scale.
bool check_eq(OrderReport& rep, const std::string& name, const DualMatrix& lhs,
              const DualMatrix& rhs, const Tolerances& tol) {
    const double res = dm_norm(dm_add(lhs, rhs, -1));
    rep.condition_residuals.emplace_back(name, res);
    return tol.near_zero(res, std::max(dm_norm(lhs), dm_norm(rhs)));
}

bool check_eq_real(OrderReport& rep, const std::string& name, const Matrix& lhs,
                   const Matrix& rhs, const Tolerances& tol) {
    const double res = (lhs - rhs).norm();
    rep.condition_residuals.emplace_back(name, res);
    return tol.near_zero(res, std::max(lhs.norm(), rhs.norm()));
}

bool real_eq(const Matrix& lhs, const Matrix& rhs, const Tolerances& tol) {
    return tol.near_zero((lhs - rhs).norm(), std::max(lhs.norm(), rhs.norm()));
}

void require_same_shape(const DualMatrix& a, const DualMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(who) + ": shape mismatch");
}

bool block_zero(OrderReport& rep, const std::string& name, const Matrix& blk,
                double scale, const Tolerances& tol) {
    const double res = blk.norm();
    rep.condition_residuals.emplace_back(name, res);
    return tol.near_zero(res, scale);
}

bool block_eq(OrderReport& rep, const std::string& name, const Matrix& lhs,
              const Matrix& rhs, double scale, const Tolerances& tol) {
    const double res = (lhs - rhs).norm();
    rep.condition_residuals.emplace_back(name, res);
    return tol.near_zero(res, scale);
}

// Shared skeleton of the canonical-form membership checks. `d_star_coupling`
// selects the coupled off-diagonal blocks of the D-star form; false gives the
// P-star form where the whole first row/column of blocks is shared.
OrderReport canonical_membership(Relation rel, const DualMatrix& a, const DualMatrix& b,
                                 const Tolerances& tol, bool d_star_coupling,
                                 bool require_zero_coupling = false) {
    require_same_shape(a, b, "canonical_membership");
    OrderReport rep;
    rep.relation = rel;
    rep.route = Route::canonical_form;

    if (!star_leq_real(a.real(), b.real(), tol)) {
        rep.condition_residuals.emplace_back("real_star_order", 1.0);
        return rep;
    }
    StarDecomposition dec;
    try {
        dec = star_decompose(a.real(), b.real(), tol);
    } catch (const OrderViolationError& e) {
        rep.diagnostics.push_back(e.what());
        return rep;
    }
    const BlockGrid ga = to_blocks(a.dual(), dec);
    const BlockGrid gb = to_blocks(b.dual(), dec);
    const double scale = std::max(a.dual().norm(), b.dual().norm());

    bool ok = true;
    // DMPGI existence of a: dual blocks outside its rank-a cross vanish.
    ok &= block_zero(rep, "A5", ga[1][1], scale, tol);
    ok &= block_zero(rep, "A6", ga[1][2], scale, tol);
    ok &= block_zero(rep, "A8", ga[2][1], scale, tol);
    ok &= block_zero(rep, "A9", ga[2][2], scale, tol);
    // DMPGI existence of b: block outside rank b vanishes.
    ok &= block_zero(rep, "B9", gb[2][2], scale, tol);

    ok &= block_eq(rep, "B1=A1", gb[0][0], ga[0][0], scale, tol);
    ok &= block_eq(rep, "B3=A3", gb[0][2], ga[0][2], scale, tol);
    ok &= block_eq(rep, "B7=A7", gb[2][0], ga[2][0], scale, tol);
    const Matrix& a2 = ga[0][1];
    const Matrix& a4 = ga[1][0];
    if (d_star_coupling) {
        const Matrix b2 = a2 - dec.t1.cwiseInverse().asDiagonal() * a4.transpose() *
                                   dec.t2.asDiagonal();
        const Matrix b4 = a4 - dec.t2.asDiagonal() * a2.transpose() *
                                   dec.t1.cwiseInverse().asDiagonal();
        ok &= block_eq(rep, "B2=A2-T1^-1*A4'*T2", gb[0][1], b2, scale, tol);
        ok &= block_eq(rep, "B4=A4-T2*A2'*T1^-1", gb[1][0], b4, scale, tol);
    } else {
        ok &= block_eq(rep, "B2=A2", gb[0][1], a2, scale, tol);
        ok &= block_eq(rep, "B4=A4", gb[1][0], a4, scale, tol);
    }
    if (require_zero_coupling) {
        ok &= block_zero(rep, "A2", a2, scale, tol);
        ok &= block_zero(rep, "A4", a4, scale, tol);
    }
    rep.holds = ok;
    return rep;
}

}  // namespace

OrderReport t_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "t_star_leq");
    OrderReport rep;
    rep.relation = Relation::t_star;
    rep.route = Route::definition;
    const DualMatrix at = a.transpose();
    const bool c1 = check_eq(rep, "A'A=A'B", dm_mul(at, a), dm_mul(at, b), tol);
    const bool c2 = check_eq(rep, "AA'=BA'", dm_mul(a, at), dm_mul(b, at), tol);
    rep.holds = c1 && c2;
    return rep;
}

OrderReport d_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "d_star_leq");
    OrderReport rep;
    rep.relation = Relation::d_star;
    rep.route = Route::definition;
    const GinvResult ga = dmpgi(a, tol);
    if (!ga.exists) rep.prerequisite_failures.push_back("DMPGI of A absent");
    if (!dmpgi_exists(b, tol)) rep.prerequisite_failures.push_back("DMPGI of B absent");
    if (!rep.prerequisite_failures.empty()) return rep;

    const DualMatrix& adag = *ga.value;
    const bool c1 = check_eq(rep, "A+A=A+B", dm_mul(adag, a), dm_mul(adag, b), tol);
    const bool c2 = check_eq(rep, "AA+=BA+", dm_mul(a, adag), dm_mul(b, adag), tol);
    rep.holds = c1 && c2;
    return rep;
}

OrderReport d_star_leq_char(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "d_star_leq_char");
    OrderReport rep;
    rep.relation = Relation::d_star;
    rep.route = Route::characterization;
    const GinvResult ga = dmpgi(a, tol);
    if (!ga.exists) rep.prerequisite_failures.push_back("DMPGI of A absent");
    if (!dmpgi_exists(b, tol)) rep.prerequisite_failures.push_back("DMPGI of B absent");
    if (!rep.prerequisite_failures.empty()) return rep;

    const Matrix ap = ga.value->real();
    const Matrix& r = ga.correction;
    bool ok = true;
    ok &= check_eq_real(rep, "A*<=B (A'A=A'B)", a.real().transpose() * a.real(),
                        a.real().transpose() * b.real(), tol);
    ok &= check_eq_real(rep, "A*<=B (AA'=BA')", a.real() * a.real().transpose(),
                        b.real() * a.real().transpose(), tol);
    ok &= check_eq_real(rep, "A+A0+RA=A+B0+RB", ap * a.dual() + r * a.real(),
                        ap * b.dual() + r * b.real(), tol);
    ok &= check_eq_real(rep, "AR+A0A+=BR+B0A+", a.real() * r + a.dual() * ap,
                        b.real() * r + b.dual() * ap, tol);
    rep.holds = ok;
    return rep;
}

OrderReport d_star_leq_canonical(const DualMatrix& a, const DualMatrix& b,
                                 const Tolerances& tol) {
    return canonical_membership(Relation::d_star, a, b, tol, /*d_star_coupling=*/true);
}

OrderReport p_order_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "p_order_leq");
    OrderReport rep;
    rep.relation = Relation::p_order;
    rep.route = Route::definition;
    const DualMatrix apd = *mpdgi(a, tol).value;
    const bool c1 = check_eq(rep, "ApA=ApB", dm_mul(apd, a), dm_mul(apd, b), tol);
    const bool c2 = check_eq(rep, "AAp=BAp", dm_mul(a, apd), dm_mul(b, apd), tol);
    rep.holds = c1 && c2;
    return rep;
}

OrderReport p_order_leq_char(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "p_order_leq_char");
    OrderReport rep;
    rep.relation = Relation::p_order;
    rep.route = Route::characterization;
    const Matrix ap = pinv(a.real(), tol);
    const Matrix rp = -ap * a.dual() * ap;
    bool ok = true;
    ok &= check_eq_real(rep, "A*<=B (A'A=A'B)", a.real().transpose() * a.real(),
                        a.real().transpose() * b.real(), tol);
    ok &= check_eq_real(rep, "A*<=B (AA'=BA')", a.real() * a.real().transpose(),
                        b.real() * a.real().transpose(), tol);
    ok &= check_eq_real(rep, "A+A0+RpA=A+B0+RpB", ap * a.dual() + rp * a.real(),
                        ap * b.dual() + rp * b.real(), tol);
    ok &= check_eq_real(rep, "ARp+A0A+=BRp+B0A+", a.real() * rp + a.dual() * ap,
                        b.real() * rp + b.dual() * ap, tol);
    rep.holds = ok;
    return rep;
}

OrderReport p_star_leq(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "p_star_leq");
    OrderReport rep = p_order_leq(a, b, tol);
    rep.relation = Relation::p_star;
    if (!dmpgi_exists(a, tol)) rep.prerequisite_failures.push_back("DMPGI of A absent");
    if (!dmpgi_exists(b, tol)) rep.prerequisite_failures.push_back("DMPGI of B absent");
    if (!rep.prerequisite_failures.empty()) {
        rep.holds = false;
        return rep;
    }
    if (rep.holds != p_star_transpose_cond(a, b, tol))
        rep.diagnostics.push_back(
            "defect: transpose characterization disagrees with definitional route");
    return rep;
}

OrderReport p_star_leq_canonical(const DualMatrix& a, const DualMatrix& b,
                                 const Tolerances& tol) {
    return canonical_membership(Relation::p_star, a, b, tol, /*d_star_coupling=*/false);
}

bool p_star_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "p_star_transpose_cond");
    const Matrix& ar = a.real();
    const Matrix& a0 = a.dual();
    return real_eq(ar.transpose() * ar, ar.transpose() * b.real(), tol) &&
           real_eq(ar * ar.transpose(), b.real() * ar.transpose(), tol) &&
           real_eq(ar.transpose() * a0, ar.transpose() * b.dual(), tol) &&
           real_eq(a0 * ar.transpose(), b.dual() * ar.transpose(), tol);
}

bool cross_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "cross_transpose_cond");
    const Matrix& ar = a.real();
    const Matrix& a0 = a.dual();
    return real_eq(a0.transpose() * ar, a0.transpose() * b.real(), tol) &&
           real_eq(ar * a0.transpose(), b.real() * a0.transpose(), tol);
}

bool mpdgi_transpose_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "mpdgi_transpose_cond");
    const Matrix& ar = a.real();
    const Matrix& br = b.real();
    const Matrix b0t = b.dual().transpose();
    return real_eq(br * b0t * ar, ar * b0t * ar, tol) &&
           real_eq(ar * b0t * br, ar * b0t * ar, tol);
}

OrderReport both_orders_canonical(const DualMatrix& a, const DualMatrix& b,
                                  const Tolerances& tol) {
    return canonical_membership(Relation::p_star, a, b, tol, /*d_star_coupling=*/false,
                                /*require_zero_coupling=*/true);
}

bool dagger_pstar_block_cond(const DualMatrix& a, const DualMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "dagger_pstar_block_cond");
    if (!star_leq_real(a.real(), b.real(), tol)) return false;
    const StarDecomposition dec = star_decompose(a.real(), b.real(), tol);
    const BlockGrid ga = to_blocks(a.dual(), dec);
    const Matrix& a2 = ga[0][1];
    const Matrix& a4 = ga[1][0];
    const Matrix lhs1 = a4 * Matrix(dec.t1.asDiagonal()) +
                        Matrix(dec.t2.asDiagonal()) * a2.transpose();
    const Matrix lhs2 = a4.transpose() * Matrix(dec.t2.asDiagonal()) +
                        Matrix(dec.t1.asDiagonal()) * a2;
    const double scale = a.dual().norm() * std::max(a.real().norm(), b.real().norm());
    return tol.near_zero(lhs1.norm(), scale) && tol.near_zero(lhs2.norm(), scale);
}

MonotoneReport check_dagger_monotone(const DualMatrix& a, const DualMatrix& b,
                                     const Tolerances& tol) {
    MonotoneReport rep;
    const GinvResult ga = dmpgi(a, tol);
    const GinvResult gb = dmpgi(b, tol);
    if (!ga.exists) rep.prerequisite_failures.push_back("DMPGI of A absent");
    if (!gb.exists) rep.prerequisite_failures.push_back("DMPGI of B absent");
    if (!rep.prerequisite_failures.empty()) return rep;
    rep.direct = d_star_leq(a, b, tol);
    rep.inverses = d_star_leq(*ga.value, *gb.value, tol);
    rep.agree = rep.direct.holds == rep.inverses.holds;
    return rep;
}

SumDiffReport check_sum_diff_dmpgi(const DualMatrix& a, const DualMatrix& b,
                                   const Tolerances& tol) {
    const OrderReport order = d_star_leq(a, b, tol);
    if (!order.holds)
        throw OrderViolationError("check_sum_diff_dmpgi: a is not below b under D-star");

    const DualMatrix a_dag = *dmpgi(a, tol).value;
    const DualMatrix b_dag = *dmpgi(b, tol).value;
    const GinvResult g_sum = dmpgi(dm_add(b, a, +1), tol);
    const GinvResult g_diff = dmpgi(dm_add(b, a, -1), tol);

    SumDiffReport rep;
    rep.sum_exist_residual = g_sum.projector_residual;
    rep.diff_exist_residual = g_diff.projector_residual;
    if (!g_sum.exists || !g_diff.exists) return rep;

    const DualMatrix sum_expected = dm_add(b_dag, dm_scale(a_dag, 0.5), -1);
    const DualMatrix diff_expected = dm_add(b_dag, a_dag, -1);
    rep.sum_identity_residual = dm_norm(dm_add(*g_sum.value, sum_expected, -1));
    rep.diff_identity_residual = dm_norm(dm_add(*g_diff.value, diff_expected, -1));
    const double scale = 1.0 + dm_norm(b_dag);
    rep.all_hold = tol.near_zero(rep.sum_identity_residual, scale) &&
                   tol.near_zero(rep.diff_identity_residual, scale);
    return rep;
}

RelationSummary relation_matrix(const DualMatrix& a, const DualMatrix& b,
                                const Tolerances& tol) {
    require_same_shape(a, b, "relation_matrix");
    RelationSummary s;

    s.star_real.relation = Relation::star_real;
    s.star_real.route = Route::definition;
    s.star_real.holds = star_leq_real(a.real(), b.real(), tol);
    s.d_star = d_star_leq(a, b, tol);
    s.t_star = t_star_leq(a, b, tol);
    s.p_order = p_order_leq(a, b, tol);
    s.p_star = p_star_leq(a, b, tol);

    s.cond_cross_transpose = cross_transpose_cond(a, b, tol);
    s.cond_six_transpose =
        s.cond_cross_transpose && p_star_transpose_cond(a, b, tol);
    s.cond_mpdgi_transpose = mpdgi_transpose_cond(a, b, tol);

    const DualMatrix a_p = *mpdgi(a, tol).value;
    const DualMatrix b_p = *mpdgi(b, tol).value;
    s.d_star_of_mpdgis = d_star_leq(a_p, b_p, tol).holds;
    s.p_star_of_mpdgis = p_star_leq(a_p, b_p, tol).holds;

    const GinvResult ga = dmpgi(a, tol);
    const GinvResult gb = dmpgi(b, tol);
    if (ga.exists && gb.exists)
        s.p_star_of_dmpgis = p_star_leq(*ga.value, *gb.value, tol).holds;
    return s;
}

}  // namespace dualorder
