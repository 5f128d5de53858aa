// Integration tests for the command-line workbench.  Runs the installed
// binary against the shipped example document and malformed fixtures, and
// checks exit codes, report fields and byte-level determinism.
//
// Usage: embrace_cli_tests <cli-binary> <fixtures-dir> <data-dir>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& cmd) {
    RunResult r;
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

int failures = 0;
std::string context;

void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    std::cout << "FAIL: " << what << "\n";
    if (!context.empty()) std::cout << "  command output was:\n" << context << "\n";
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& label) {
    context = r.output;
    expect(r.output.find(needle) != std::string::npos,
           label + ": output should contain '" + needle + "'");
    context.clear();
}

void expect_exit(const RunResult& r, int code, const std::string& label) {
    context = r.output;
    expect(r.exit_code == code, label + ": expected exit code " + std::to_string(code) + ", got " +
                                    std::to_string(r.exit_code));
    context.clear();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cout << "usage: embrace_cli_tests <cli-binary> <fixtures-dir> <data-dir>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::string fixtures = argv[2];
    const std::string data = argv[3];
    const std::string corpus = "\"" + data + "/corpus.json\"";

    // --- cohomology dimensions of the shipped example -----------------------
    {
        RunResult r = run(cli + " hh --input " + corpus + " --degree 2");
        expect_exit(r, 0, "hh degree 2");
        expect_contains(r, "dimension=1", "hh degree 2");
        expect_contains(r, "RESULT pass", "hh degree 2");
    }
    {
        RunResult r = run(cli + " hh --input " + corpus + " --degree 0");
        expect_exit(r, 0, "hh degree 0");
        expect_contains(r, "dimension=2", "hh degree 0");
    }

    // --- malformed documents -------------------------------------------------
    {
        RunResult r = run(cli + " check --input \"" + fixtures + "/malformed.json\"");
        expect_exit(r, 2, "malformed document");
        expect_contains(r, "input error: /quiver/bogus: unknown key", "malformed document");
    }
    {
        RunResult r = run(cli + " check --input \"" + fixtures + "/bad_reference.json\"");
        expect_exit(r, 2, "dangling cochain reference");
        expect_contains(r, "/deformations/broken/cocycle", "dangling cochain reference");
        expect_contains(r, "no_such_cochain", "dangling cochain reference");
    }
    {
        RunResult r = run(cli + " hh");
        expect_exit(r, 2, "missing required --input");
    }
    {
        RunResult r = run(cli + " verify --suite nope");
        expect_exit(r, 2, "unknown suite name");
    }

    // --- structure and section checks ---------------------------------------
    {
        RunResult r = run(cli + " check --input " + corpus);
        expect_exit(r, 0, "check");
        expect_contains(r, "category_kind=linear", "check");
        expect_contains(r, "closed=false", "check (a non-closed cochain is reported)");
        expect_contains(r, "valid=true", "check");
        expect_contains(r, "RESULT pass", "check");
    }
    {
        RunResult r = run(cli + " embr --input " + corpus);
        expect_exit(r, 0, "embr");
        expect_contains(r, "closed_form match=true", "embr");
        expect_contains(r, "roundtrip=true", "embr");
        expect_contains(r, "zero_part_match=true", "embr");
    }

    // --- obstructions, lifts and gauges --------------------------------------
    {
        RunResult r = run(cli + " obstruct --input " + corpus);
        expect_exit(r, 0, "obstruct");
        expect_contains(r, "outcome=obstructed", "obstruct");
        expect_contains(r, "outcome=lifts", "obstruct");
        expect_contains(r, "consistent=true", "obstruct");
    }
    {
        RunResult r =
            run(cli + " lift --input " + corpus + " --deformation main --complex x3");
        expect_exit(r, 0, "lift on the obstructed window");
        expect_contains(r, "outcome=obstructed", "lift on the obstructed window");
        expect_contains(r, "witness=null", "lift on the obstructed window");
        expect_contains(r, "system_rank=1", "lift on the obstructed window");
        expect_contains(r, "augmented_rank=2", "lift on the obstructed window");
    }
    {
        RunResult r = run(cli + " lift --input " + corpus + " --deformation main --complex x2");
        expect_exit(r, 0, "lift on the unobstructed window");
        expect_contains(r, "outcome=lifts", "lift on the unobstructed window");
        expect_contains(r, "lift_space_dim=1", "lift on the unobstructed window");
    }
    {
        RunResult r = run(cli + " gauge --input " + corpus);
        expect_exit(r, 0, "gauge");
        expect_contains(r, "found=true", "gauge");
        expect_contains(r, "verified=true", "gauge");
        expect_contains(r, "found=false", "gauge");
    }

    // --- verification suites: determinism and fault detection ----------------
    {
        RunResult a = run(cli + " verify --suite brace --seed 11");
        RunResult b = run(cli + " verify --suite brace --seed 11");
        expect_exit(a, 0, "verify brace");
        expect_contains(a, "RESULT pass", "verify brace");
        context = a.output + "\n--- second run ---\n" + b.output;
        expect(a.output == b.output, "verify brace: two runs must be byte-identical");
        context.clear();
    }
    {
        RunResult a = run(cli + " verify --suite brace --seed 11 --format records");
        RunResult b = run(cli + " verify --suite brace --seed 11 --format records");
        expect_exit(a, 0, "verify brace (records)");
        expect_contains(a, "\"kind\":\"suite\"", "verify brace (records)");
        expect_contains(a, "\"pass\":true", "verify brace (records)");
        expect(a.output == b.output, "verify brace (records): two runs must be byte-identical");
    }
    {
        RunResult r = run("EMBRACE_SIGN_FAULT=1 " + cli + " verify --suite structure --seed 11");
        expect_exit(r, 1, "verify with corrupted transposition signs");
        expect_contains(r, "RESULT FAIL", "verify with corrupted transposition signs");
    }
    {
        RunResult serial = run(cli + " verify --input " + corpus + " --suite brace --seed 11");
        expect_exit(serial, 0, "verify with document tasks");
        expect_contains(serial, "name=brace", "verify with document tasks");
        expect_contains(serial, "op=check pass=true", "verify with document tasks");
        expect_contains(serial, "op=gauge pass=true", "verify with document tasks");
        expect_contains(serial, "RESULT pass", "verify with document tasks");
        RunResult parallel =
            run(cli + " verify --input " + corpus + " --suite brace --seed 11 --parallel");
        expect_exit(parallel, 0, "parallel verify");
        context = serial.output + "\n--- parallel ---\n" + parallel.output;
        expect(serial.output == parallel.output,
               "parallel verify must match the serial run byte for byte");
        context.clear();
    }

    if (failures) {
        std::cout << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
