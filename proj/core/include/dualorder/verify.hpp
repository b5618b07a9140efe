#pragma once

#include "dualorder/dual_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dualorder {

/// Result of one theorem property suite. failures == 0 is the pass condition.
struct VerifyOutcome {
    std::string theorem_id;
    int trials = 0;
    int failures = 0;
    double max_residual = 0.0;
    std::uint64_t seed = 0;
};

/// Ids accepted by verify_theorem, in presentation order.
std::vector<std::string> theorem_ids();

/// Run the named suite over `trials` seeded trials (fixture suites ignore the
/// trial count). Throws std::invalid_argument for an unknown id.
VerifyOutcome verify_theorem(const std::string& id, int trials, std::uint64_t seed,
                             const Tolerances& tol);

}  // namespace dualorder
