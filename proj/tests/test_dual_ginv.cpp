#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualorder/dual_ginv.hpp"
#include "dualorder/fixtures.hpp"
#include "dualorder/real_linalg.hpp"
#include "dualorder/synthesis.hpp"

#include <random>

using namespace dualorder;

namespace {

const Tolerances tol;

Matrix m3(double a11, double a12, double a13, double a21, double a22, double a23,
          double a31, double a32, double a33) {
    Matrix x(3, 3);
    x << a11, a12, a13, a21, a22, a23, a31, a32, a33;
    return x;
}

bool close(const DualMatrix& x, const Matrix& real_expected,
           const Matrix& dual_expected, double atol) {
    return (x.real() - real_expected).norm() <= atol &&
           (x.dual() - dual_expected).norm() <= atol;
}

Matrix random_dense(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix x(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) x(i, j) = dist(rng);
    return x;
}

}  // namespace

TEST_CASE("mpdgi closed forms") {
    const GinvResult g1 = mpdgi(fixtures::f1(), tol);
    CHECK(g1.exists);
    Matrix er(2, 2), ed(2, 2);
    er << 1, 0, 0, 0;
    ed << -1, 0, 0, 0;
    CHECK(close(*g1.value, er, ed, 1e-12));

    const GinvResult g8 = mpdgi(fixtures::f8(), tol);
    CHECK(close(*g8.value, m3(1, 0, 0, 0, 0.5, 0, 0, 0, 0),
                m3(-1, 3, 0, 0, 0.5, 0, 0, 0, 0), 1e-10));

    // Dual part zero: reduces to the real pseudoinverse.
    const DualMatrix real_only(fixtures::f8().real());
    const GinvResult gr = mpdgi(real_only, tol);
    CHECK(close(*gr.value, pinv(real_only.real(), tol), Matrix::Zero(3, 3), 1e-12));
}

TEST_CASE("dmpgi existence verdicts") {
    CHECK_FALSE(dmpgi_exists(fixtures::f2(), tol));
    CHECK(dmpgi_exists(fixtures::f6(), tol));

    // A = 0 forces A0 = 0 for existence.
    const DualMatrix nilpotent(Matrix::Zero(2, 2), Matrix::Ones(2, 2));
    CHECK_FALSE(dmpgi_exists(nilpotent, tol));
    CHECK(dmpgi_exists(DualMatrix::zero(2, 2), tol));

    const ExistenceReport rep = dmpgi_existence(fixtures::f2(), tol);
    CHECK(rep.projector_residual == doctest::Approx(1.0));
    CHECK(rep.routes_agree);
    CHECK_FALSE(rep.rank_route_exists);
}

TEST_CASE("dmpgi closed forms") {
    const GinvResult g6 = dmpgi(fixtures::f6(), tol);
    REQUIRE(g6.exists);
    CHECK(close(*g6.value, m3(1, 0, 0, 0, 0, 0, 0, 0, 0),
                m3(-1, 4, 7, 2, 0, 0, 3, 0, 0), 1e-10));
    for (double r : g6.penrose_residuals) CHECK(r <= 1e-12);

    // Value pinned by the Penrose-residual oracle, not copied from a table.
    const GinvResult g8 = dmpgi(fixtures::f8(), tol);
    REQUIRE(g8.exists);
    CHECK(close(*g8.value, m3(1, 0, 0, 0, 0.5, 0, 0, 0, 0),
                m3(-1, 3, 7, 0, 0.5, -0.75, 3, -0.25, 0), 1e-10));
    for (double r : g8.penrose_residuals) CHECK(r <= 1e-12);

    const GinvResult gid = dmpgi(DualMatrix::identity(3), tol);
    CHECK(close(*gid.value, Matrix::Identity(3, 3), Matrix::Zero(3, 3), 1e-12));

    const GinvResult missing = dmpgi(fixtures::f2(), tol);
    CHECK_FALSE(missing.exists);
    CHECK_FALSE(missing.value.has_value());
}

TEST_CASE("penrose_residuals oracle") {
    const auto r6 = penrose_residuals(fixtures::f6(), *dmpgi(fixtures::f6(), tol).value);
    for (double r : r6) CHECK(r <= 1e-12);

    const auto r1 = penrose_residuals(fixtures::f1(), *mpdgi(fixtures::f1(), tol).value);
    for (double r : r1) CHECK(r <= 1e-12);

    // F2 admits no DMPGI, so its MPDGI must violate the first equation.
    const auto r2 = penrose_residuals(fixtures::f2(), *mpdgi(fixtures::f2(), tol).value);
    CHECK(r2[0] > 0.5);

    CHECK_THROWS_AS(penrose_residuals(fixtures::f6(), DualMatrix::zero(2, 2)),
                    DimensionError);
}

TEST_CASE("compact formula and SVD block route agree") {
    GenSpec spec;
    spec.m = 5;
    spec.n = 4;
    spec.rank_a = 2;
    spec.rank_b = 2;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        spec.seed = seed;
        const DualMatrix x = gen_dual_with_dmpgi(spec);
        const GinvResult g1 = dmpgi(x, tol);
        const GinvResult g2 = dmpgi_svd_route(x, tol);
        REQUIRE(g1.exists);
        REQUIRE(g2.exists);
        CHECK(dm_norm(dm_add(*g1.value, *g2.value, -1)) <=
              1e-9 * (1.0 + dm_norm(*g1.value)));
    }
}

TEST_CASE("dmpgi is an involution and shares its real part with mpdgi") {
    GenSpec spec;
    spec.m = 4;
    spec.n = 6;
    spec.rank_a = 3;
    spec.rank_b = 3;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        spec.seed = seed;
        const DualMatrix x = gen_dual_with_dmpgi(spec);
        const GinvResult g = dmpgi(x, tol);
        REQUIRE(g.exists);
        const GinvResult gg = dmpgi(*g.value, tol);
        REQUIRE(gg.exists);
        CHECK(dm_norm(dm_add(*gg.value, x, -1)) <= 1e-8 * (1.0 + dm_norm(x)));
        CHECK((mpdgi(x, tol).value->real() - g.value->real()).norm() <= 1e-12);
    }
}

TEST_CASE("existence routes agree on random inputs") {
    std::mt19937_64 rng(31);
    GenSpec spec;
    spec.m = 4;
    spec.n = 5;
    spec.rank_a = 2;
    spec.rank_b = 2;
    int disagreements = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        spec.seed = seed;
        DualMatrix x = gen_dual_with_dmpgi(spec);
        if (seed % 3 == 0)  // negative control: generic dense dual part
            x = DualMatrix(x.real(), random_dense(rng, 4, 5));
        if (!dmpgi_existence(x, tol).routes_agree) ++disagreements;
    }
    CHECK(disagreements == 0);
}
