#pragma once

#include "dualorder/dual_matrix.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <utility>

namespace dualorder {

/// Parameters for the canonical-form generators. Identical specs produce
/// bit-identical outputs.
struct GenSpec {
    Eigen::Index m = 3;
    Eigen::Index n = 3;
    int rank_a = 1;
    int rank_b = 2;
    std::uint64_t seed = 0;
    std::array<double, 2> block_scale = {0.5, 2.0};  ///< range for T-block diagonals
    std::array<double, 2> noise_scale = {-1.0, 1.0}; ///< range for free dual blocks

    void validate() const;                  ///< throws std::invalid_argument
    void validate_chain(int rank_c) const;
};

/// Seeded random orthogonal matrix via QR of a Gaussian sample with
/// sign-fixed R diagonal (Haar up to the sign convention).
Matrix random_orthogonal(Eigen::Index n, std::mt19937_64& rng);

/// A dual matrix whose DMPGI exists by construction (the dual block outside
/// the rank cross is zero in the generating basis).
DualMatrix gen_dual_with_dmpgi(const GenSpec& spec);

/// A pair ordered under D-star by construction: the coupled blocks
/// B2 = A2 - T1^-1 A4' T2 and B4 = A4 - T2 A2' T1^-1 are enforced exactly
/// in the rotated basis.
std::pair<DualMatrix, DualMatrix> gen_d_star_pair(const GenSpec& spec);

/// A pair ordered under P-star by construction (shared first block row and
/// column, both DMPGIs exist).
std::pair<DualMatrix, DualMatrix> gen_p_star_pair(const GenSpec& spec);

/// A pair ordered under both D-star and P-star (coupling blocks A2 = A4 = 0).
std::pair<DualMatrix, DualMatrix> gen_both_pair(const GenSpec& spec);

/// A chain a <= b <= c under D-star, built from the four-way block split of
/// the transitivity construction.
std::array<DualMatrix, 3> gen_d_star_chain(const GenSpec& spec, int rank_c);

}  // namespace dualorder
