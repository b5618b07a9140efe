#pragma once

#include "dualorder/dual_matrix.hpp"

#include <stdexcept>
#include <string>

namespace dualorder {

/// Thrown on malformed matrix files (maps to the CLI's parse exit code).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse a matrix document: keys rows, cols, real, dual (row-major 2D
/// arrays). dual may be omitted and defaults to zero; unknown keys are
/// rejected.
DualMatrix parse_matrix(const std::string& text);

DualMatrix load_matrix(const std::string& path);

/// Serialize so that a reload reproduces the exact binary64 values.
std::string format_matrix(const DualMatrix& x);

void save_matrix(const std::string& path, const DualMatrix& x);

}  // namespace dualorder
