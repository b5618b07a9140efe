#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualorder/dual_ginv.hpp"
#include "dualorder/orders.hpp"
#include "dualorder/real_linalg.hpp"
#include "dualorder/synthesis.hpp"

#include <random>

using namespace dualorder;

namespace {

const Tolerances tol;

GenSpec spec_of(Eigen::Index m, Eigen::Index n, int a, int b, std::uint64_t seed) {
    GenSpec spec;
    spec.m = m;
    spec.n = n;
    spec.rank_a = a;
    spec.rank_b = b;
    spec.seed = seed;
    return spec;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec_of(0, 3, 1, 1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, 3, 2, 1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, 3, 1, 4, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, 3, 1, 2, 0).validate_chain(4), std::invalid_argument);
    CHECK_NOTHROW(spec_of(3, 3, 1, 2, 0).validate_chain(3));
}

TEST_CASE("random_orthogonal is orthogonal and deterministic") {
    std::mt19937_64 rng1(7), rng2(7);
    const Matrix q1 = random_orthogonal(5, rng1);
    const Matrix q2 = random_orthogonal(5, rng2);
    CHECK(q1 == q2);
    CHECK((q1.transpose() * q1 - Matrix::Identity(5, 5)).norm() <= 1e-12);
}

TEST_CASE("generators are deterministic per spec") {
    const GenSpec spec = spec_of(4, 5, 1, 3, 99);
    const auto [a1, b1] = gen_d_star_pair(spec);
    const auto [a2, b2] = gen_d_star_pair(spec);
    CHECK(a1.real() == a2.real());
    CHECK(a1.dual() == a2.dual());
    CHECK(b1.real() == b2.real());
    CHECK(b1.dual() == b2.dual());

    const DualMatrix x1 = gen_dual_with_dmpgi(spec_of(3, 3, 2, 2, 5));
    const DualMatrix x2 = gen_dual_with_dmpgi(spec_of(3, 3, 2, 2, 5));
    CHECK(x1.real() == x2.real());
    CHECK(x1.dual() == x2.dual());
}

TEST_CASE("gen_dual_with_dmpgi soundness") {
    const DualMatrix x = gen_dual_with_dmpgi(spec_of(2, 2, 1, 1, 7));
    CHECK(dmpgi_exists(x, tol));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const DualMatrix y = gen_dual_with_dmpgi(spec_of(5, 4, 2, 2, seed));
        CHECK(dmpgi_exists(y, tol));
        CHECK(rank(y.real(), tol) == 2);
    }
}

TEST_CASE("rank-0 spec with zero noise yields the zero matrix") {
    GenSpec spec = spec_of(3, 3, 0, 0, 11);
    spec.noise_scale = {0.0, 0.0};
    const DualMatrix x = gen_dual_with_dmpgi(spec);
    CHECK(x.real().isZero(0.0));
    CHECK(x.dual().isZero(0.0));
}

TEST_CASE("negative control: filling the excluded block kills existence") {
    const DualMatrix x = gen_dual_with_dmpgi(spec_of(3, 3, 1, 1, 42));
    const Matrix ap = pinv(x.real(), tol);
    const Matrix left = Matrix::Identity(3, 3) - x.real() * ap;
    const Matrix right = Matrix::Identity(3, 3) - ap * x.real();
    const Matrix violation = left * Matrix::Ones(3, 3) * right;
    REQUIRE(violation.norm() > 0.1);
    CHECK_FALSE(dmpgi_exists(DualMatrix(x.real(), x.dual() + violation), tol));
}

TEST_CASE("gen_d_star_pair soundness via the definitional route") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [a, b] = gen_d_star_pair(spec_of(5, 5, 2, 4, seed));
        CHECK(d_star_leq(a, b, tol).holds);
    }
    // a = b rank: duals coincide and the pair degenerates to (x, x).
    const auto [a, b] = gen_d_star_pair(spec_of(4, 4, 2, 2, 3));
    CHECK(dm_approx_eq(a, b, tol));
}

TEST_CASE("gen_p_star_pair soundness") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [a, b] = gen_p_star_pair(spec_of(4, 6, 1, 3, seed));
        CHECK(p_star_leq(a, b, tol).holds);
    }
}

TEST_CASE("gen_both_pair satisfies both orders") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [a, b] = gen_both_pair(spec_of(5, 4, 1, 3, seed));
        CHECK(d_star_leq(a, b, tol).holds);
        CHECK(p_star_leq(a, b, tol).holds);
    }
}

TEST_CASE("gen_d_star_chain is transitive by construction") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto chain = gen_d_star_chain(spec_of(4, 4, 1, 2, seed), 3);
        CHECK(d_star_leq(chain[0], chain[1], tol).holds);
        CHECK(d_star_leq(chain[1], chain[2], tol).holds);
        CHECK(d_star_leq(chain[0], chain[2], tol).holds);
    }
    const auto flat = gen_d_star_chain(spec_of(3, 3, 2, 2, 1), 2);
    CHECK(dm_approx_eq(flat[0], flat[1], tol));
    CHECK(dm_approx_eq(flat[1], flat[2], tol));
}

TEST_CASE("perturbing a coupled block breaks the advertised order") {
    int flipped = 0;
    const int trials = 100;
    for (std::uint64_t seed = 1; seed <= trials; ++seed) {
        const auto [a, b] = gen_d_star_pair(spec_of(4, 4, 1, 3, seed));
        const StarDecomposition dec = star_decompose(a.real(), b.real(), tol);
        BlockGrid gb = to_blocks(b.dual(), dec);
        gb[0][1](0, 0) += 0.1;
        const DualMatrix bad(b.real(), from_blocks(gb, dec));
        if (!d_star_leq(a, bad, tol).holds) ++flipped;
    }
    CHECK(flipped == trials);
}
