#pragma once

#include "dualorder/dual_matrix.hpp"

#include <string>
#include <vector>

namespace dualorder::fixtures {

/// The eight canonical counterexample matrices. F1/F2 break antisymmetry of
/// the bare P-order; F3/F4/F5 separate P-star from D-star; F6/F7/F8 drive the
/// relation theorems.
DualMatrix f1();
DualMatrix f2();
DualMatrix f3();
DualMatrix f4();
DualMatrix f5();
DualMatrix f6();
DualMatrix f7();
DualMatrix f8();

/// Fixture by name "F1".."F8"; throws std::invalid_argument on unknown name.
DualMatrix by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace dualorder::fixtures
