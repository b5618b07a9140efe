#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualorder/fixtures.hpp"
#include "dualorder/io.hpp"

#include <random>
#include <string>

using namespace dualorder;

namespace {

const std::string kFixturesDir = DUALORDER_FIXTURES_DIR;

}  // namespace

TEST_CASE("parse a minimal document") {
    const DualMatrix x = parse_matrix(
        R"({"rows": 2, "cols": 2, "real": [[1, 0], [0, 0]], "dual": [[1, 0], [0, 1]]})");
    CHECK(x.real() == fixtures::f2().real());
    CHECK(x.dual() == fixtures::f2().dual());
}

TEST_CASE("dual part defaults to zero") {
    const DualMatrix x =
        parse_matrix(R"({"rows": 1, "cols": 2, "real": [[3, 4]]})");
    CHECK(x.dual().isZero(0.0));
}

TEST_CASE("strict parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_matrix("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1})"), ParseError);
    CHECK_THROWS_AS(
        parse_matrix(R"({"rows": 1, "cols": 1, "real": [[1]], "extra": 1})"),
        ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 2, "cols": 1, "real": [[1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 2, "real": [[1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "real": [["x"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 0, "cols": 1, "real": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1.5, "cols": 1, "real": [[1]]})"),
                    ParseError);
}

TEST_CASE("format/parse round trip is bit exact") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix real(3, 4), dual(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
            real(i, j) = dist(rng) / 3.0;
            dual(i, j) = dist(rng) * 1e-7;
        }
    const DualMatrix x(real, dual);
    const DualMatrix back = parse_matrix(format_matrix(x));
    CHECK(back.real() == x.real());
    CHECK(back.dual() == x.dual());
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
    for (const std::string& name : fixtures::names()) {
        const DualMatrix from_file = load_matrix(kFixturesDir + "/" + name + ".json");
        const DualMatrix built_in = fixtures::by_name(name);
        CHECK(from_file.real() == built_in.real());
        CHECK(from_file.dual() == built_in.dual());
    }
}

TEST_CASE("load_matrix reports missing files") {
    CHECK_THROWS_AS(load_matrix(kFixturesDir + "/no-such-file.json"), ParseError);
}

TEST_CASE("fixture registry") {
    CHECK(fixtures::names().size() == 8);
    CHECK_THROWS_AS(fixtures::by_name("F9"), std::invalid_argument);
}
