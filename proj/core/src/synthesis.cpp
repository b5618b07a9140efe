#include "dualorder/synthesis.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <stdexcept>

namespace dualorder {

namespace {

Matrix random_block(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng,
                    const std::array<double, 2>& range) {
    std::uniform_real_distribution<double> dist(range[0], range[1]);
    Matrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) x(i, j) = dist(rng);
    return x;
}

// Positive diagonal entries, sorted descending so they stay clear of the
// rank threshold ordering.
Vector random_t_diag(int k, std::mt19937_64& rng, const std::array<double, 2>& range) {
    std::uniform_real_distribution<double> dist(range[0], range[1]);
    Vector t(k);
    for (int i = 0; i < k; ++i) t[i] = dist(rng);
    std::sort(t.data(), t.data() + k, std::greater<double>());
    return t;
}

Matrix diag_real(const std::array<const Vector*, 3>& ts, Eigen::Index m, Eigen::Index n) {
    Matrix x = Matrix::Zero(m, n);
    Eigen::Index off = 0;
    for (const Vector* t : ts) {
        if (!t) continue;
        x.block(off, off, t->size(), t->size()) = t->asDiagonal();
        off += t->size();
    }
    return x;
}

}  // namespace

void GenSpec::validate() const {
    if (m < 1 || n < 1) throw std::invalid_argument("GenSpec: m, n must be positive");
    if (rank_a < 0 || rank_b < rank_a || rank_b > std::min(m, n))
        throw std::invalid_argument("GenSpec: need 0 <= rank_a <= rank_b <= min(m, n)");
    if (block_scale[0] <= 0.0 || block_scale[1] < block_scale[0])
        throw std::invalid_argument("GenSpec: invalid block_scale range");
    if (noise_scale[1] < noise_scale[0])
        throw std::invalid_argument("GenSpec: invalid noise_scale range");
}

void GenSpec::validate_chain(int rank_c) const {
    validate();
    if (rank_c < rank_b || rank_c > std::min(m, n))
        throw std::invalid_argument("GenSpec: need rank_b <= rank_c <= min(m, n)");
}

Matrix random_orthogonal(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

DualMatrix gen_dual_with_dmpgi(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    const Vector t1 = random_t_diag(a, rng, spec.block_scale);

    Matrix d = Matrix::Zero(m, n);
    d.topLeftCorner(a, a) = random_block(a, a, rng, spec.noise_scale);
    d.topRightCorner(a, n - a) = random_block(a, n - a, rng, spec.noise_scale);
    d.bottomLeftCorner(m - a, a) = random_block(m - a, a, rng, spec.noise_scale);

    return DualMatrix(u * diag_real({&t1, nullptr, nullptr}, m, n) * v.transpose(),
                      u * d * v.transpose());
}

std::pair<DualMatrix, DualMatrix> gen_d_star_pair(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a, b = spec.rank_b, k = b - a;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    const Vector t1 = random_t_diag(a, rng, spec.block_scale);
    const Vector t2 = random_t_diag(k, rng, spec.block_scale);

    const Matrix a1 = random_block(a, a, rng, spec.noise_scale);
    const Matrix a2 = random_block(a, k, rng, spec.noise_scale);
    const Matrix a3 = random_block(a, n - b, rng, spec.noise_scale);
    const Matrix a4 = random_block(k, a, rng, spec.noise_scale);
    const Matrix a7 = random_block(m - b, a, rng, spec.noise_scale);
    const Matrix b5 = random_block(k, k, rng, spec.noise_scale);
    const Matrix b6 = random_block(k, n - b, rng, spec.noise_scale);
    const Matrix b8 = random_block(m - b, k, rng, spec.noise_scale);

    Matrix a0 = Matrix::Zero(m, n);
    a0.topLeftCorner(a, a) = a1;
    a0.block(0, a, a, k) = a2;
    a0.topRightCorner(a, n - b) = a3;
    a0.block(a, 0, k, a) = a4;
    a0.bottomLeftCorner(m - b, a) = a7;

    Matrix b0 = a0;
    b0.block(0, a, a, k) =
        a2 - t1.cwiseInverse().asDiagonal() * a4.transpose() * t2.asDiagonal();
    b0.block(a, 0, k, a) =
        a4 - t2.asDiagonal() * a2.transpose() * t1.cwiseInverse().asDiagonal();
    b0.block(a, a, k, k) = b5;
    b0.block(a, a + k, k, n - b) = b6;
    b0.block(a + k, a, m - b, k) = b8;

    return {DualMatrix(u * diag_real({&t1, nullptr, nullptr}, m, n) * v.transpose(),
                       u * a0 * v.transpose()),
            DualMatrix(u * diag_real({&t1, &t2, nullptr}, m, n) * v.transpose(),
                       u * b0 * v.transpose())};
}

std::pair<DualMatrix, DualMatrix> gen_p_star_pair(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a, b = spec.rank_b, k = b - a;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    const Vector t1 = random_t_diag(a, rng, spec.block_scale);
    const Vector t2 = random_t_diag(k, rng, spec.block_scale);

    Matrix a0 = Matrix::Zero(m, n);
    a0.topLeftCorner(a, a) = random_block(a, a, rng, spec.noise_scale);
    a0.block(0, a, a, k) = random_block(a, k, rng, spec.noise_scale);
    a0.topRightCorner(a, n - b) = random_block(a, n - b, rng, spec.noise_scale);
    a0.block(a, 0, k, a) = random_block(k, a, rng, spec.noise_scale);
    a0.bottomLeftCorner(m - b, a) = random_block(m - b, a, rng, spec.noise_scale);

    Matrix b0 = a0;
    b0.block(a, a, k, k) = random_block(k, k, rng, spec.noise_scale);
    b0.block(a, a + k, k, n - b) = random_block(k, n - b, rng, spec.noise_scale);
    b0.block(a + k, a, m - b, k) = random_block(m - b, k, rng, spec.noise_scale);

    return {DualMatrix(u * diag_real({&t1, nullptr, nullptr}, m, n) * v.transpose(),
                       u * a0 * v.transpose()),
            DualMatrix(u * diag_real({&t1, &t2, nullptr}, m, n) * v.transpose(),
                       u * b0 * v.transpose())};
}

std::pair<DualMatrix, DualMatrix> gen_both_pair(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a, b = spec.rank_b, k = b - a;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    const Vector t1 = random_t_diag(a, rng, spec.block_scale);
    const Vector t2 = random_t_diag(k, rng, spec.block_scale);

    // Coupling blocks A2 and A4 stay zero: the pair satisfies both orders.
    Matrix a0 = Matrix::Zero(m, n);
    a0.topLeftCorner(a, a) = random_block(a, a, rng, spec.noise_scale);
    a0.topRightCorner(a, n - b) = random_block(a, n - b, rng, spec.noise_scale);
    a0.bottomLeftCorner(m - b, a) = random_block(m - b, a, rng, spec.noise_scale);

    Matrix b0 = a0;
    b0.block(a, a, k, k) = random_block(k, k, rng, spec.noise_scale);
    b0.block(a, a + k, k, n - b) = random_block(k, n - b, rng, spec.noise_scale);
    b0.block(a + k, a, m - b, k) = random_block(m - b, k, rng, spec.noise_scale);

    return {DualMatrix(u * diag_real({&t1, nullptr, nullptr}, m, n) * v.transpose(),
                       u * a0 * v.transpose()),
            DualMatrix(u * diag_real({&t1, &t2, nullptr}, m, n) * v.transpose(),
                       u * b0 * v.transpose())};
}

std::array<DualMatrix, 3> gen_d_star_chain(const GenSpec& spec, int rank_c) {
    spec.validate_chain(rank_c);
    std::mt19937_64 rng(spec.seed);
    const Eigen::Index m = spec.m, n = spec.n;
    const int a = spec.rank_a, k = spec.rank_b - a, l = rank_c - spec.rank_b;
    const int b = spec.rank_b, c = rank_c;
    const Matrix u = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(n, rng);
    const Vector t1 = random_t_diag(a, rng, spec.block_scale);
    const Vector t2 = random_t_diag(k, rng, spec.block_scale);
    const Vector t3 = random_t_diag(l, rng, spec.block_scale);
    const auto t1i = t1.cwiseInverse();
    const auto t2i = t2.cwiseInverse();

    const Matrix a1 = random_block(a, a, rng, spec.noise_scale);
    const Matrix a2 = random_block(a, k, rng, spec.noise_scale);
    const Matrix a31 = random_block(a, l, rng, spec.noise_scale);
    const Matrix a32 = random_block(a, n - c, rng, spec.noise_scale);
    const Matrix a4 = random_block(k, a, rng, spec.noise_scale);
    const Matrix a71 = random_block(l, a, rng, spec.noise_scale);
    const Matrix a72 = random_block(m - c, a, rng, spec.noise_scale);
    const Matrix b5 = random_block(k, k, rng, spec.noise_scale);
    const Matrix b61 = random_block(k, l, rng, spec.noise_scale);
    const Matrix b62 = random_block(k, n - c, rng, spec.noise_scale);
    const Matrix b81 = random_block(l, k, rng, spec.noise_scale);
    const Matrix b82 = random_block(m - c, k, rng, spec.noise_scale);
    const Matrix c11 = random_block(l, l, rng, spec.noise_scale);
    const Matrix c12 = random_block(l, n - c, rng, spec.noise_scale);
    const Matrix c15 = random_block(m - c, l, rng, spec.noise_scale);

    Matrix a0 = Matrix::Zero(m, n);
    a0.block(0, 0, a, a) = a1;
    a0.block(0, a, a, k) = a2;
    a0.block(0, b, a, l) = a31;
    a0.block(0, c, a, n - c) = a32;
    a0.block(a, 0, k, a) = a4;
    a0.block(b, 0, l, a) = a71;
    a0.block(c, 0, m - c, a) = a72;

    const Matrix b2c = a2 - t1i.asDiagonal() * a4.transpose() * t2.asDiagonal();
    const Matrix b4c = a4 - t2.asDiagonal() * a2.transpose() * t1i.asDiagonal();
    Matrix b0 = a0;
    b0.block(0, a, a, k) = b2c;
    b0.block(a, 0, k, a) = b4c;
    b0.block(a, a, k, k) = b5;
    b0.block(a, b, k, l) = b61;
    b0.block(a, c, k, n - c) = b62;
    b0.block(b, a, l, k) = b81;
    b0.block(c, a, m - c, k) = b82;

    Matrix c0 = b0;
    c0.block(0, b, a, l) = a31 - t1i.asDiagonal() * a71.transpose() * t3.asDiagonal();
    c0.block(a, b, k, l) = b61 - t2i.asDiagonal() * b81.transpose() * t3.asDiagonal();
    c0.block(b, 0, l, a) = a71 - t3.asDiagonal() * a31.transpose() * t1i.asDiagonal();
    c0.block(b, a, l, k) = b81 - t3.asDiagonal() * b61.transpose() * t2i.asDiagonal();
    c0.block(b, b, l, l) = c11;
    c0.block(b, c, l, n - c) = c12;
    c0.block(c, b, m - c, l) = c15;

    return {DualMatrix(u * diag_real({&t1, nullptr, nullptr}, m, n) * v.transpose(),
                       u * a0 * v.transpose()),
            DualMatrix(u * diag_real({&t1, &t2, nullptr}, m, n) * v.transpose(),
                       u * b0 * v.transpose()),
            DualMatrix(u * diag_real({&t1, &t2, &t3}, m, n) * v.transpose(),
                       u * c0 * v.transpose())};
}

}  // namespace dualorder
