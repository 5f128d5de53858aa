// Release acceptance checklist: runs the ten criteria and prints one
// PASS/FAIL line per criterion.  Exits nonzero when any criterion fails.

#include "embrace/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = 20260814;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    std::printf("acceptance checklist (seed %llu)\n", static_cast<unsigned long long>(seed));
    std::vector<embrace::AcceptanceLine> lines;
    try {
        lines = embrace::run_acceptance(seed);
    } catch (const std::exception& e) {
        std::printf("acceptance run aborted: %s\n", e.what());
        return 1;
    }
    int failed = 0;
    for (const auto& line : lines) {
        std::printf("criterion %2d: %s  %s\n", line.criterion, line.pass ? "PASS" : "FAIL",
                    line.summary.c_str());
        if (!line.pass) ++failed;
    }
    if (lines.size() != 10) {
        std::printf("expected 10 criteria, got %zu\n", lines.size());
        return 1;
    }
    if (failed) {
        std::printf("%d of 10 criteria FAILED\n", failed);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
