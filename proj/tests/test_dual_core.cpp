#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualorder/dual_matrix.hpp"
#include "dualorder/fixtures.hpp"

#include <random>

using namespace dualorder;

namespace {

Matrix m2(double a, double b, double c, double d) {
    Matrix x(2, 2);
    x << a, b, c, d;
    return x;
}

Matrix random_dense(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix x(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) x(i, j) = dist(rng);
    return x;
}

DualMatrix random_dual(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n) {
    return DualMatrix(random_dense(rng, m, n), random_dense(rng, m, n));
}

}  // namespace

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS_AS(DualMatrix(Matrix::Zero(2, 2), Matrix::Zero(2, 3)), DimensionError);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(DualMatrix(bad, Matrix::Zero(2, 2)), std::invalid_argument);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(DualMatrix(Matrix::Zero(2, 2), bad), std::invalid_argument);
}

TEST_CASE("dm_add doubling and cancellation") {
    const DualMatrix f1 = fixtures::f1();
    const DualMatrix twice = dm_add(f1, f1, +1);
    CHECK(twice.real() == m2(2, 0, 0, 0));
    CHECK(twice.dual() == m2(2, 0, 0, 0));
    const DualMatrix zero = dm_add(f1, f1, -1);
    CHECK(zero.real().isZero(0.0));
    CHECK(zero.dual().isZero(0.0));
}

TEST_CASE("dm_add entrywise subtraction of 3x3 fixtures") {
    const DualMatrix diff = dm_add(fixtures::f8(), fixtures::f6(), -1);
    Matrix er(3, 3), ed(3, 3);
    er << 0, 0, 0, 0, 2, 0, 0, 0, 0;
    ed << 0, -8, 0, -4, -2, -1, 0, -3, 0;
    CHECK(diff.real() == er);
    CHECK(diff.dual() == ed);
}

TEST_CASE("dm_mul drops the nilpotent cross term") {
    const DualMatrix f1 = fixtures::f1();
    const DualMatrix sq = dm_mul(f1, f1);
    CHECK(sq.real() == m2(1, 0, 0, 0));
    CHECK(sq.dual() == m2(2, 0, 0, 0));

    const DualMatrix id = DualMatrix::identity(2);
    const DualMatrix f2 = fixtures::f2();
    const DualMatrix same = dm_mul(id, f2);
    CHECK(same.real() == f2.real());
    CHECK(same.dual() == f2.dual());

    // 1x1 nilpotents: eps * 2eps = 0.
    const DualMatrix e1(Matrix::Zero(1, 1), Matrix::Ones(1, 1));
    const DualMatrix e2(Matrix::Zero(1, 1), 2.0 * Matrix::Ones(1, 1));
    const DualMatrix prod = dm_mul(e1, e2);
    CHECK(prod.real()(0, 0) == 0.0);
    CHECK(prod.dual()(0, 0) == 0.0);
}

TEST_CASE("dm_transpose") {
    const DualMatrix f1 = fixtures::f1();
    CHECK(dm_transpose(f1).real() == f1.real());
    CHECK(dm_transpose(f1).dual() == f1.dual());

    const DualMatrix f6t = dm_transpose(fixtures::f6());
    Matrix ed(3, 3);
    ed << 1, 4, 7, 2, 0, 0, 3, 0, 0;
    CHECK(f6t.real() == fixtures::f6().real().transpose());
    CHECK(f6t.dual() == ed);
}

TEST_CASE("dm_approx_eq") {
    const Tolerances tol;
    const DualMatrix f1 = fixtures::f1();
    CHECK(dm_approx_eq(f1, f1, tol));
    CHECK_FALSE(dm_approx_eq(f1, fixtures::f2(), tol));
    const DualMatrix nudged(f1.real(),
                            f1.dual() + 1e-14 * Matrix::Ones(2, 2));
    CHECK(dm_approx_eq(f1, nudged, tol));
}

TEST_CASE("product associativity survives the truncation") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const DualMatrix x = random_dual(rng, 3, 4);
        const DualMatrix y = random_dual(rng, 4, 2);
        const DualMatrix z = random_dual(rng, 2, 5);
        const DualMatrix lhs = dm_mul(dm_mul(x, y), z);
        const DualMatrix rhs = dm_mul(x, dm_mul(y, z));
        CHECK(dm_norm(dm_add(lhs, rhs, -1)) <= 1e-12 * (1.0 + dm_norm(lhs)));
    }
}

TEST_CASE("transpose reverses products") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        const DualMatrix x = random_dual(rng, 3, 4);
        const DualMatrix y = random_dual(rng, 4, 2);
        const DualMatrix lhs = dm_transpose(dm_mul(x, y));
        const DualMatrix rhs = dm_mul(dm_transpose(y), dm_transpose(x));
        CHECK(dm_norm(dm_add(lhs, rhs, -1)) <= 1e-12 * (1.0 + dm_norm(lhs)));
    }
}

TEST_CASE("add/sub round trip") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const DualMatrix x = random_dual(rng, 4, 3);
        const DualMatrix y = random_dual(rng, 4, 3);
        const DualMatrix back = dm_add(x, dm_add(y, x, -1), +1);
        CHECK(dm_norm(dm_add(back, y, -1)) <= 1e-14 * (1.0 + dm_norm(y)));
    }
}

TEST_CASE("dm_scale and dm_norm") {
    const DualMatrix f6 = fixtures::f6();
    const DualMatrix half = dm_scale(f6, 0.5);
    CHECK(half.real() == Matrix(0.5 * f6.real()));
    CHECK(half.dual() == Matrix(0.5 * f6.dual()));
    CHECK(dm_norm(f6) ==
          doctest::Approx(std::hypot(f6.real().norm(), f6.dual().norm())));
}
