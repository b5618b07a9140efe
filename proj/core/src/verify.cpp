#include "dualorder/verify.hpp"

#include "dualorder/dual_ginv.hpp"
#include "dualorder/fixtures.hpp"
#include "dualorder/orders.hpp"
#include "dualorder/real_linalg.hpp"
#include "dualorder/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace dualorder {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random pair spec with 1 <= rank_a <= rank_b <= min(m, n).
GenSpec random_pair_spec(std::mt19937_64& rng, std::uint64_t gen_seed) {
    GenSpec spec;
    spec.m = uniform_int(rng, 2, 6);
    spec.n = uniform_int(rng, 2, 6);
    const int maxr = static_cast<int>(std::min(spec.m, spec.n));
    spec.rank_b = uniform_int(rng, 1, maxr);
    spec.rank_a = uniform_int(rng, 1, spec.rank_b);
    spec.seed = gen_seed;
    return spec;
}

Matrix random_dense(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix x(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) x(i, j) = dist(rng);
    return x;
}

// Break the shared (or coupled) block of b's dual part by 0.1 while leaving
// the DMPGI-existence blocks of both matrices untouched.
DualMatrix perturb_coupling(const DualMatrix& a, const DualMatrix& b,
                            const Tolerances& tol, double delta = 0.1) {
    const StarDecomposition dec = star_decompose(a.real(), b.real(), tol);
    BlockGrid gb = to_blocks(b.dual(), dec);
    if (gb[0][1].size() > 0)
        gb[0][1](0, 0) += delta;
    else
        gb[0][0](0, 0) += delta;
    return DualMatrix(b.real(), from_blocks(gb, dec));
}

// Arbitrary dual noise outside rank(b): keeps every P-order verdict intact
// when added to both matrices in a P-ordered pair.
std::pair<DualMatrix, DualMatrix> add_shared_tail_noise(
    const DualMatrix& a, const DualMatrix& b, const Tolerances& tol,
    std::mt19937_64& rng) {
    const StarDecomposition dec = star_decompose(a.real(), b.real(), tol);
    const Eigen::Index m = a.rows(), n = a.cols();
    const Eigen::Index rb = dec.split_rows[0] + dec.split_rows[1];
    Matrix tail = Matrix::Zero(m, n);
    tail.bottomRightCorner(m - rb, n - rb) = random_dense(rng, m - rb, n - rb);
    const Matrix e = dec.u * tail * dec.v.transpose();
    return {DualMatrix(a.real(), a.dual() + e), DualMatrix(b.real(), b.dual() + e)};
}

// P-star chain (a <= b <= c) from the four-way block split: each step only
// fills blocks that the smaller matrix leaves zero.
std::array<DualMatrix, 3> gen_p_star_chain(const GenSpec& spec, int rank_c) {
    spec.validate_chain(rank_c);
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a, b = spec.rank_b, c = rank_c;
    const int k = b - a, l = c - b;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    std::uniform_real_distribution<double> tdist(spec.block_scale[0], spec.block_scale[1]);
    Vector t(c);
    for (int i = 0; i < c; ++i) t[i] = tdist(rng);

    Matrix a0 = Matrix::Zero(m, n);
    a0.topLeftCorner(a, n) = random_dense(rng, a, n);
    a0.block(a, 0, m - a, a) = random_dense(rng, m - a, a);

    Matrix b0 = a0;
    b0.block(a, a, k, n - a) = random_dense(rng, k, n - a);
    b0.block(b, a, m - b, k) = random_dense(rng, m - b, k);

    Matrix c0 = b0;
    c0.block(b, b, l, n - b) = random_dense(rng, l, n - b);
    c0.block(c, b, m - c, l) = random_dense(rng, m - c, l);

    auto real_of = [&](int r) {
        Matrix x = Matrix::Zero(m, n);
        x.topLeftCorner(r, r) = Vector(t.head(r)).asDiagonal();
        return Matrix(u * x * v.transpose());
    };
    return {DualMatrix(real_of(a), u * a0 * v.transpose()),
            DualMatrix(real_of(b), u * b0 * v.transpose()),
            DualMatrix(real_of(c), u * c0 * v.transpose())};
}

struct Suite {
    VerifyOutcome out;
    Tolerances tol;

    void check(bool ok) {
        ++out.trials;
        if (!ok) ++out.failures;
    }
    void residual(double r) { out.max_residual = std::max(out.max_residual, r); }
    void track(const OrderReport& rep) {
        for (const auto& [name, r] : rep.condition_residuals) residual(r);
    }
};

bool all_equal(std::initializer_list<bool> vs) {
    bool first = *vs.begin();
    return std::all_of(vs.begin(), vs.end(), [&](bool v) { return v == first; });
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void thm_2_2(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        auto [da, db] = gen_d_star_pair(spec);
        Matrix a = da.real(), b = db.real();
        bool expect = true;
        if (t % 3 == 2) {
            b += 0.1 * a;  // A^T B = 1.1 A^T A != A^T A for nonzero a
            expect = false;
        }
        const Matrix ap = pinv(a, s.tol);
        const double scale = std::max(a.norm(), b.norm());
        const bool pinv_route =
            s.tol.near_zero((ap * a - ap * b).norm(), scale) &&
            s.tol.near_zero((a * ap - b * ap).norm(), scale);
        const bool transpose_route = star_leq_real(a, b, s.tol);
        bool canonical_route = true;
        try {
            const StarDecomposition dec = star_decompose(a, b, s.tol);
            s.residual((a - from_blocks(to_blocks(a, dec), dec)).norm());
        } catch (const OrderViolationError&) {
            canonical_route = false;
        }
        s.check(all_equal({pinv_route, transpose_route, canonical_route, expect}));
    }
}

void thm_2_3(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        GenSpec spec;
        spec.m = uniform_int(rng, 2, 8);
        spec.n = uniform_int(rng, 2, 6);
        const int maxr = static_cast<int>(std::min<Eigen::Index>(spec.m, spec.n));
        spec.rank_a = uniform_int(rng, 1, std::min(maxr, 5));
        spec.rank_b = spec.rank_a;
        spec.seed = splitmix64(seed ^ (t + 1));
        DualMatrix x = gen_dual_with_dmpgi(spec);
        bool expect_exists = true;
        if (t % 3 == 2) {
            // Force a nonzero projector block.
            const Matrix ap = pinv(x.real(), s.tol);
            const Matrix left = Matrix::Identity(x.rows(), x.rows()) - x.real() * ap;
            const Matrix right = Matrix::Identity(x.cols(), x.cols()) - ap * x.real();
            const Matrix w = left * random_dense(rng, x.rows(), x.cols()) * right;
            if (w.norm() > 1e-6) {
                x = DualMatrix(x.real(), x.dual() + w);
                expect_exists = false;
            }
        }
        const ExistenceReport rep = dmpgi_existence(x, s.tol);
        bool ok = rep.routes_agree && rep.exists == expect_exists;
        if (rep.exists) {
            const GinvResult g1 = dmpgi(x, s.tol);
            const GinvResult g2 = dmpgi_svd_route(x, s.tol);
            const double bound = 1e-9 * (1.0 + dm_norm(x));
            for (double r : g1.penrose_residuals) {
                s.residual(r);
                ok &= r <= bound;
            }
            const double gap = dm_norm(dm_add(*g1.value, *g2.value, -1));
            s.residual(gap);
            ok &= gap <= 1e-9 * (1.0 + dm_norm(*g1.value));
        }
        s.check(ok);
    }
}

void thm_2_4(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const Eigen::Index m = uniform_int(rng, 2, 6);
        const Eigen::Index n = uniform_int(rng, 2, 6);
        // General dual matrix; the MPDGI must exist and match its block form.
        GenSpec spec;
        spec.m = m;
        spec.n = n;
        spec.rank_a = uniform_int(rng, 1, static_cast<int>(std::min(m, n)));
        spec.rank_b = spec.rank_a;
        spec.seed = splitmix64(seed ^ (t + 1));
        const DualMatrix base = gen_dual_with_dmpgi(spec);
        const DualMatrix x(base.real(), base.dual() + 0.5 * random_dense(rng, m, n));

        const GinvResult g = mpdgi(x, s.tol);
        bool ok = g.exists;

        const SvdFactors f = svd(x.real(), s.tol);
        const int a = f.rank;
        const Vector t1i = f.sigma.head(a).cwiseInverse();
        const Matrix a1 =
            (f.u.transpose() * x.dual() * f.v).topLeftCorner(a, a);
        Matrix sr = Matrix::Zero(n, m);
        sr.topLeftCorner(a, a) = t1i.asDiagonal();
        Matrix dr = Matrix::Zero(n, m);
        dr.topLeftCorner(a, a) = -(t1i.asDiagonal() * a1 * t1i.asDiagonal());
        const DualMatrix block_route(f.v * sr * f.u.transpose(),
                                     f.v * dr * f.u.transpose());
        const double gap = dm_norm(dm_add(*g.value, block_route, -1));
        s.residual(gap);
        ok &= gap <= 1e-9 * (1.0 + dm_norm(*g.value));
        s.check(ok);
    }
}

// Pair scenarios shared by the route-agreement suites. Returns a pair with
// both DMPGIs existing; scenario 0 is D-star by construction, 1 is P-star by
// construction, 2 is a perturbed (generally unordered) pair.
std::pair<DualMatrix, DualMatrix> mixed_pair(int t, std::uint64_t seed,
                                             const Tolerances& tol) {
    std::mt19937_64 rng(splitmix64(seed + t));
    const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
    switch (t % 3) {
        case 0: return gen_d_star_pair(spec);
        case 1: return gen_p_star_pair(spec);
        default: {
            auto [a, b] = gen_d_star_pair(spec);
            return {a, perturb_coupling(a, b, tol)};
        }
    }
}

void thm_3_1(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = mixed_pair(t, seed, s.tol);
        const OrderReport def = d_star_leq(a, b, s.tol);
        const OrderReport chr = d_star_leq_char(a, b, s.tol);
        if (def.holds) s.track(def);
        s.check(def.holds == chr.holds && def.prerequisite_failures.empty());
    }
}

void thm_3_2(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = mixed_pair(t, seed, s.tol);
        const OrderReport def = d_star_leq(a, b, s.tol);
        const OrderReport can = d_star_leq_canonical(a, b, s.tol);
        if (def.holds) s.track(can);
        s.check(def.holds == can.holds);
    }
}

void thm_3_3(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        switch (t % 3) {
            case 0: {  // reflexivity
                spec.rank_b = spec.rank_a;
                const DualMatrix x = gen_dual_with_dmpgi(spec);
                s.check(d_star_leq(x, x, s.tol).holds);
                break;
            }
            case 1: {  // antisymmetry
                auto [a, b] = gen_d_star_pair(spec);
                const bool fwd = d_star_leq(a, b, s.tol).holds;
                const bool bwd = d_star_leq(b, a, s.tol).holds;
                s.check(fwd && (!bwd || dm_approx_eq(a, b, s.tol)));
                break;
            }
            default: {  // transitivity
                const int maxr = static_cast<int>(std::min(spec.m, spec.n));
                const int rank_c = uniform_int(rng, spec.rank_b, maxr);
                const auto chain = gen_d_star_chain(spec, rank_c);
                s.check(d_star_leq(chain[0], chain[1], s.tol).holds &&
                        d_star_leq(chain[1], chain[2], s.tol).holds &&
                        d_star_leq(chain[0], chain[2], s.tol).holds);
                break;
            }
        }
    }
}

void thm_3_4(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = mixed_pair(t, seed, s.tol);
        const MonotoneReport rep = check_dagger_monotone(a, b, s.tol);
        s.check(rep.prerequisite_failures.empty() && rep.agree);
    }
}

void thm_3_5(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        auto [a, b] = gen_d_star_pair(spec);
        const SumDiffReport rep = check_sum_diff_dmpgi(a, b, s.tol);
        s.residual(rep.sum_identity_residual);
        s.residual(rep.diff_identity_residual);
        s.check(rep.all_hold);
    }
}

void thm_3_6(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = mixed_pair(t, seed, s.tol);
        const OrderReport d = d_star_leq(a, b, s.tol);
        const OrderReport ts = t_star_leq(a, b, s.tol);
        s.check(d.prerequisite_failures.empty() && d.holds == ts.holds);
    }
}

void thm_4_1(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        auto [a, b] = gen_p_star_pair(spec);
        if (t % 3 == 1) {
            // General dual parts: tail noise leaves the P-order intact.
            std::tie(a, b) = add_shared_tail_noise(a, b, s.tol, rng);
        } else if (t % 3 == 2) {
            b = perturb_coupling(a, b, s.tol);
        }
        const OrderReport def = p_order_leq(a, b, s.tol);
        const OrderReport chr = p_order_leq_char(a, b, s.tol);
        if (def.holds) s.track(def);
        s.check(def.holds == chr.holds);
    }
}

void thm_4_2(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        auto [a, b] = gen_p_star_pair(spec);
        if (t % 2 == 1) std::tie(a, b) = add_shared_tail_noise(a, b, s.tol, rng);
        if (!p_order_leq(a, b, s.tol).holds) {
            s.check(false);
            continue;
        }
        // P-order forces the first block row and column of the dual parts to
        // coincide in the canonical basis of the real pair.
        const StarDecomposition dec = star_decompose(a.real(), b.real(), s.tol);
        const BlockGrid ga = to_blocks(a.dual(), dec);
        const BlockGrid gb = to_blocks(b.dual(), dec);
        const double scale = std::max(a.dual().norm(), b.dual().norm());
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
            const double r1 = (ga[0][j] - gb[0][j]).norm();
            const double r2 = (ga[j][0] - gb[j][0]).norm();
            s.residual(r1);
            s.residual(r2);
            ok &= s.tol.near_zero(r1, scale) && s.tol.near_zero(r2, scale);
        }
        s.check(ok);
    }
}

void thm_4_3(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        switch (t % 3) {
            case 0: {
                spec.rank_b = spec.rank_a;
                const DualMatrix x = gen_dual_with_dmpgi(spec);
                s.check(p_star_leq(x, x, s.tol).holds);
                break;
            }
            case 1: {
                auto [a, b] = gen_p_star_pair(spec);
                const bool fwd = p_star_leq(a, b, s.tol).holds;
                const bool bwd = p_star_leq(b, a, s.tol).holds;
                s.check(fwd && (!bwd || dm_approx_eq(a, b, s.tol)));
                break;
            }
            default: {
                const int maxr = static_cast<int>(std::min(spec.m, spec.n));
                const int rank_c = uniform_int(rng, spec.rank_b, maxr);
                const auto chain = gen_p_star_chain(spec, rank_c);
                s.check(p_star_leq(chain[0], chain[1], s.tol).holds &&
                        p_star_leq(chain[1], chain[2], s.tol).holds &&
                        p_star_leq(chain[0], chain[2], s.tol).holds);
                break;
            }
        }
    }
}

void thm_4_4(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = mixed_pair(t, seed, s.tol);
        const OrderReport rep = p_star_leq(a, b, s.tol);
        s.check(rep.prerequisite_failures.empty() &&
                rep.holds == p_star_transpose_cond(a, b, s.tol) &&
                rep.diagnostics.empty());
    }
}

// Pair that is D-star by construction; even trials also satisfy P-star.
std::pair<DualMatrix, DualMatrix> d_star_given_pair(int t, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed + t));
    const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
    return t % 2 == 0 ? gen_both_pair(spec) : gen_d_star_pair(spec);
}

std::pair<DualMatrix, DualMatrix> p_star_given_pair(int t, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed + t));
    const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
    return t % 2 == 0 ? gen_both_pair(spec) : gen_p_star_pair(spec);
}

void thm_5_1(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = d_star_given_pair(t, seed);
        if (!d_star_leq(a, b, s.tol).holds) {
            s.check(false);
            continue;
        }
        const DualMatrix a_dag = *dmpgi(a, s.tol).value;
        const DualMatrix b_dag = *dmpgi(b, s.tol).value;
        s.check(all_equal({p_star_leq(a, b, s.tol).holds,
                           both_orders_canonical(a, b, s.tol).holds,
                           cross_transpose_cond(a, b, s.tol),
                           p_star_leq(a_dag, b_dag, s.tol).holds}));
    }
}

void thm_5_2(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = p_star_given_pair(t, seed);
        if (!p_star_leq(a, b, s.tol).holds) {
            s.check(false);
            continue;
        }
        const DualMatrix a_p = *mpdgi(a, s.tol).value;
        const DualMatrix b_p = *mpdgi(b, s.tol).value;
        s.check(all_equal({d_star_leq(a, b, s.tol).holds,
                           p_star_leq(a_p, b_p, s.tol).holds,
                           both_orders_canonical(a, b, s.tol).holds,
                           cross_transpose_cond(a, b, s.tol)}));
    }
}

void thm_5_3(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + t));
        const GenSpec spec = random_pair_spec(rng, splitmix64(seed ^ (t + 1)));
        auto [a, b] = t % 3 == 0   ? gen_both_pair(spec)
                      : t % 3 == 1 ? gen_d_star_pair(spec)
                                   : gen_p_star_pair(spec);
        const RelationSummary sum = relation_matrix(a, b, s.tol);
        const bool c1 = sum.d_star.holds && sum.p_star.holds;
        const bool c2 = sum.d_star.holds && sum.p_star_of_dmpgis.value_or(false);
        const bool c3 = sum.p_star.holds && sum.p_star_of_mpdgis.value_or(false);
        const bool c4 = sum.cond_six_transpose;
        const bool c5 = both_orders_canonical(a, b, s.tol).holds;
        s.check(all_equal({c1, c2, c3, c4, c5}));
    }
}

void thm_5_4(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = d_star_given_pair(t, seed);
        if (!d_star_leq(a, b, s.tol).holds) {
            s.check(false);
            continue;
        }
        const DualMatrix a_p = *mpdgi(a, s.tol).value;
        const DualMatrix b_p = *mpdgi(b, s.tol).value;
        // Canonical route: coupling blocks of b's dual vanish.
        const StarDecomposition dec = star_decompose(a.real(), b.real(), s.tol);
        const BlockGrid gb = to_blocks(b.dual(), dec);
        const double scale = std::max(a.dual().norm(), b.dual().norm());
        const bool canonical = s.tol.near_zero(gb[0][1].norm(), scale) &&
                               s.tol.near_zero(gb[1][0].norm(), scale);
        s.check(all_equal({d_star_leq(a_p, b_p, s.tol).holds,
                           mpdgi_transpose_cond(a, b, s.tol), canonical}));
    }
}

void thm_5_5(Suite& s, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto [a, b] = p_star_given_pair(t, seed);
        if (!p_star_leq(a, b, s.tol).holds) {
            s.check(false);
            continue;
        }
        const DualMatrix a_dag = *dmpgi(a, s.tol).value;
        const DualMatrix b_dag = *dmpgi(b, s.tol).value;
        s.check(p_star_leq(a_dag, b_dag, s.tol).holds ==
                dagger_pstar_block_cond(a, b, s.tol));
    }
}

// ---------------------------------------------------------------------------
// Fixture replays
// ---------------------------------------------------------------------------

bool dual_matches(const DualMatrix& x, const Matrix& real_expected,
                  const Matrix& dual_expected, double atol) {
    return (x.real() - real_expected).norm() <= atol &&
           (x.dual() - dual_expected).norm() <= atol;
}

void fixtures_4_1(Suite& s) {
    const DualMatrix a = fixtures::f1();
    const DualMatrix b = fixtures::f2();
    Matrix er(2, 2), ed(2, 2);
    er << 1, 0, 0, 0;
    ed << -1, 0, 0, 0;
    s.check(dual_matches(*mpdgi(a, s.tol).value, er, ed, 1e-12));
    s.check(dual_matches(*mpdgi(b, s.tol).value, er, ed, 1e-12));
    s.check(p_order_leq(a, b, s.tol).holds);
    s.check(p_order_leq(b, a, s.tol).holds);
    s.check(!dm_approx_eq(a, b, s.tol));
    s.check(!dmpgi_exists(b, s.tol));
    s.check(!p_star_leq(a, b, s.tol).holds);  // DMPGI of b absent
}

void fixtures_5_1(Suite& s) {
    const DualMatrix a = fixtures::f3();
    const DualMatrix b = fixtures::f4();
    const DualMatrix c = fixtures::f5();
    s.check(p_star_leq(a, b, s.tol).holds);
    s.check(!d_star_leq(a, b, s.tol).holds);
    s.check(d_star_leq(a, c, s.tol).holds);
    s.check(!p_star_leq(a, c, s.tol).holds);
    s.check(d_star_leq_char(a, c, s.tol).holds);
    const SumDiffReport rep = check_sum_diff_dmpgi(a, c, s.tol);
    s.residual(rep.sum_identity_residual);
    s.residual(rep.diff_identity_residual);
    s.check(rep.all_hold);
}

void fixtures_5_2(Suite& s) {
    const DualMatrix a = fixtures::f6();
    const DualMatrix b = fixtures::f7();
    s.check(p_star_leq(a, b, s.tol).holds);
    s.check(!d_star_leq(a, b, s.tol).holds);
    Matrix er(3, 3), ed(3, 3);
    er << 1, 0, 0, 0, 0.5, 0, 0, 0, 0;
    ed << -1, -1, 0, -2, 0.25, 0, 0, 0, 0;
    s.check(dual_matches(*mpdgi(b, s.tol).value, er, ed, 1e-10));
    const DualMatrix a_dag = *dmpgi(a, s.tol).value;
    const DualMatrix b_dag = *dmpgi(b, s.tol).value;
    s.check(!p_star_leq(a_dag, b_dag, s.tol).holds);
}

void fixtures_5_3(Suite& s) {
    const DualMatrix a = fixtures::f6();
    const DualMatrix b = fixtures::f8();
    s.check(d_star_leq(a, b, s.tol).holds);
    s.check(t_star_leq(a, b, s.tol).holds);
    s.check(!p_star_leq(a, b, s.tol).holds);

    Matrix er(3, 3), ed(3, 3);
    er << 1, 0, 0, 0, 0, 0, 0, 0, 0;
    ed << -1, 4, 7, 2, 0, 0, 3, 0, 0;
    s.check(dual_matches(*dmpgi(a, s.tol).value, er, ed, 1e-10));

    er << 1, 0, 0, 0, 0.5, 0, 0, 0, 0;
    ed << -1, 3, 0, 0, 0.5, 0, 0, 0, 0;
    s.check(dual_matches(*mpdgi(b, s.tol).value, er, ed, 1e-10));

    const DualMatrix a_p = *mpdgi(a, s.tol).value;
    const DualMatrix b_p = *mpdgi(b, s.tol).value;
    s.check(!d_star_leq(a_p, b_p, s.tol).holds);
    const DualMatrix a_dag = *dmpgi(a, s.tol).value;
    const DualMatrix b_dag = *dmpgi(b, s.tol).value;
    s.check(!p_star_leq(a_dag, b_dag, s.tol).holds);
}

}  // namespace

std::vector<std::string> theorem_ids() {
    return {"thm-2.2", "thm-2.3", "thm-2.4", "thm-3.1", "thm-3.2", "thm-3.3",
            "thm-3.4", "thm-3.5", "thm-3.6", "thm-4.1", "thm-4.2", "thm-4.3",
            "thm-4.4", "thm-5.1", "thm-5.2", "thm-5.3", "thm-5.4", "thm-5.5",
            "fixtures-4.1", "fixtures-5.1", "fixtures-5.2", "fixtures-5.3"};
}

VerifyOutcome verify_theorem(const std::string& id, int trials, std::uint64_t seed,
                             const Tolerances& tol) {
    Suite s;
    s.out.theorem_id = id;
    s.out.seed = seed;
    s.tol = tol;

    using Fn = std::function<void(Suite&, int, std::uint64_t)>;
    static const std::map<std::string, Fn> suites = {
        {"thm-2.2", thm_2_2}, {"thm-2.3", thm_2_3}, {"thm-2.4", thm_2_4},
        {"thm-3.1", thm_3_1}, {"thm-3.2", thm_3_2}, {"thm-3.3", thm_3_3},
        {"thm-3.4", thm_3_4}, {"thm-3.5", thm_3_5}, {"thm-3.6", thm_3_6},
        {"thm-4.1", thm_4_1}, {"thm-4.2", thm_4_2}, {"thm-4.3", thm_4_3},
        {"thm-4.4", thm_4_4}, {"thm-5.1", thm_5_1}, {"thm-5.2", thm_5_2},
        {"thm-5.3", thm_5_3}, {"thm-5.4", thm_5_4}, {"thm-5.5", thm_5_5},
    };

    if (auto it = suites.find(id); it != suites.end()) {
        it->second(s, trials, seed);
        return s.out;
    }
    if (id == "fixtures-4.1") fixtures_4_1(s);
    else if (id == "fixtures-5.1") fixtures_5_1(s);
    else if (id == "fixtures-5.2") fixtures_5_2(s);
    else if (id == "fixtures-5.3") fixtures_5_3(s);
    else throw std::invalid_argument("unknown theorem id: " + id);
    return s.out;
}

}  // namespace dualorder
