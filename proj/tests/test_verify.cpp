#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualorder/verify.hpp"

#include <stdexcept>

using namespace dualorder;

TEST_CASE("theorem id registry") {
    const auto ids = theorem_ids();
    CHECK(ids.size() == 22);
    CHECK(ids.front() == "thm-2.2");
    CHECK(ids.back() == "fixtures-5.3");
    CHECK_THROWS_AS(verify_theorem("thm-9.9", 1, 0, Tolerances{}), std::invalid_argument);
}

TEST_CASE("every suite passes a short run") {
    const Tolerances tol;
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        const VerifyOutcome out = verify_theorem(id, 40, 1, tol);
        CHECK(out.failures == 0);
        CHECK(out.trials > 0);
    }
}

TEST_CASE("outcomes are deterministic in the seed") {
    const Tolerances tol;
    const VerifyOutcome a = verify_theorem("thm-3.6", 25, 7, tol);
    const VerifyOutcome b = verify_theorem("thm-3.6", 25, 7, tol);
    CHECK(a.failures == b.failures);
    CHECK(a.max_residual == b.max_residual);
}
