#include "doctest.h"

#include "embrace/signs.hpp"
#include "embrace/suites.hpp"

#include <stdexcept>

using namespace embrace;

namespace {

// Restores the sign engine even when a CHECK aborts the enclosing subcase.
struct FaultGuard {
    ~FaultGuard() { fault::corrupt_koszul_signs(false); }
};

bool same_results(const std::vector<SuiteResult>& a, const std::vector<SuiteResult>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].name != b[i].name || a[i].pass != b[i].pass || a[i].checks != b[i].checks ||
            a[i].failures != b[i].failures)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("brace suite passes and reports a nontrivial check count") {
    SuiteResult r = run_brace_suite(1);
    CHECK(r.name == "brace");
    CHECK(r.pass);
    CHECK(r.failures.empty());
    CHECK(r.checks >= 100);
}

TEST_CASE("suite battery is deterministic for a fixed seed") {
    auto a = run_suites("all", 7);
    auto b = run_suites("all", 7);
    CHECK(a.size() == suite_names().size());
    CHECK(same_results(a, b));
    for (const auto& r : a) {
        CHECK(r.pass);
        CHECK(r.checks > 0);
    }
}

TEST_CASE("suite names are fixed and unknown names are rejected") {
    CHECK(suite_names().size() == 6);
    CHECK(run_suites("brace", 3).size() == 1);
    CHECK(run_suites("centrality", 3).size() == 1);
    CHECK_THROWS_AS(run_suites("nope", 3), std::invalid_argument);
}

TEST_CASE("corrupting the sign engine is detected by the suites") {
    REQUIRE_FALSE(fault::koszul_signs_corrupted());
    {
        FaultGuard guard;
        fault::corrupt_koszul_signs(true);
        REQUIRE(fault::koszul_signs_corrupted());
        SuiteResult brace = run_brace_suite(1);
        SuiteResult structure = run_structure_suite(1);
        // At least one identity family must notice a broken transposition sign;
        // the failure report stays bounded.
        CHECK((!brace.pass || !structure.pass));
        const SuiteResult& failing = !brace.pass ? brace : structure;
        CHECK(!failing.failures.empty());
        CHECK(failing.failures.size() <= 8);
    }
    REQUIRE_FALSE(fault::koszul_signs_corrupted());
    CHECK(run_brace_suite(1).pass);
}
