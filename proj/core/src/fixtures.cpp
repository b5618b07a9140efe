#include "dualorder/fixtures.hpp"

#include <stdexcept>

namespace dualorder::fixtures {

namespace {

Matrix m2(double a, double b, double c, double d) {
    Matrix x(2, 2);
    x << a, b, c, d;
    return x;
}

Matrix m3(double a11, double a12, double a13, double a21, double a22, double a23,
          double a31, double a32, double a33) {
    Matrix x(3, 3);
    x << a11, a12, a13, a21, a22, a23, a31, a32, a33;
    return x;
}

}  // namespace

DualMatrix f1() { return DualMatrix(m2(1, 0, 0, 0), m2(1, 0, 0, 0)); }
DualMatrix f2() { return DualMatrix(m2(1, 0, 0, 0), m2(1, 0, 0, 1)); }

DualMatrix f3() {
    return DualMatrix(m3(1, 0, 0, 0, 0, 0, 0, 0, 0), m3(1, 1, 1, 1, 0, 0, 1, 0, 0));
}

DualMatrix f4() {
    return DualMatrix(m3(1, 0, 0, 0, 1, 0, 0, 0, 0), m3(1, 1, 1, 1, 1, 0, 1, 0, 0));
}

DualMatrix f5() {
    return DualMatrix(m3(1, 0, 0, 0, 1, 0, 0, 0, 0), m3(1, 0, 1, 0, 1, 0, 1, 0, 0));
}

DualMatrix f6() {
    return DualMatrix(m3(1, 0, 0, 0, 0, 0, 0, 0, 0), m3(1, 2, 3, 4, 0, 0, 7, 0, 0));
}

DualMatrix f7() {
    return DualMatrix(m3(1, 0, 0, 0, 2, 0, 0, 0, 0), m3(1, 2, 3, 4, -1, -2, 7, -3, 0));
}

DualMatrix f8() {
    return DualMatrix(m3(1, 0, 0, 0, 2, 0, 0, 0, 0), m3(1, -6, 3, 0, -2, -1, 7, -3, 0));
}

DualMatrix by_name(const std::string& name) {
    if (name == "F1") return f1();
    if (name == "F2") return f2();
    if (name == "F3") return f3();
    if (name == "F4") return f4();
    if (name == "F5") return f5();
    if (name == "F6") return f6();
    if (name == "F7") return f7();
    if (name == "F8") return f8();
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> names() {
    return {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"};
}

}  // namespace dualorder::fixtures
