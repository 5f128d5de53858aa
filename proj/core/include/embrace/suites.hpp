#pragma once

#include "embrace/corpus.hpp"
#include "embrace/deformation.hpp"

#include <cstdint>

namespace embrace {

// Result of one named verification suite.  Each suite runs a fixed,
// seed-deterministic battery of identity checks over the built-in example
// categories; `failures` carries serialized counterexamples for the first few
// failing checks (never more than eight, so reports stay readable).
struct SuiteResult {
    std::string name;
    bool pass = true;
    int checks = 0;
    std::vector<std::string> failures;
};

// Higher-order brace composition law on seeded random cochains (degree-zero
// and graded quivers, Q and GF(7)), plus the dot-product/brace comparison.
SuiteResult run_brace_suite(std::uint64_t seed);

// Differential squares to zero on full bases and on window categories;
// suspended, commutator and classical routes agree; the four direct identities
// of curved differential structures hold on every window example.
SuiteResult run_structure_suite(std::uint64_t seed);

// The section onto twisted complexes: projection inverts it, it preserves
// braces on random samples, the transported structure matches the entrywise
// closed form, and the arity-0 part matches the diagonal-contraction oracle.
SuiteResult run_embr_suite(std::uint64_t seed);

// Cohomology dimensions against an independent rank oracle; the equivalence
// "characteristic class vanishes iff a first-order lift exists" on every
// corpus complex, with rank certificates; gauge equivalence matching
// cohomology classes, including an exhaustive search over GF(2).
SuiteResult run_maintheorem_suite(std::uint64_t seed);

// First-order structure of lifted predifferentials: the two lifting routes
// differ by the boundary of the lift correction, for the trivial correction
// and for seeded random corrections over GF(5); deformable-locus consistency.
SuiteResult run_precomplexes_suite(std::uint64_t seed);

// Characteristic values commute with every chain map between corpus windows
// up to an explicitly solved homotopy.
SuiteResult run_centrality_suite(std::uint64_t seed);

// name ∈ {brace, structure, embr, maintheorem, precomplexes, centrality, all};
// anything else throws std::invalid_argument.
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed);

const std::vector<std::string>& suite_names();

// One line of the release acceptance checklist.
struct AcceptanceLine {
    int criterion = 0;
    bool pass = false;
    std::string summary;
};

// Runs the ten release acceptance criteria and reports one line per
// criterion: seeded brace-law sampling, structure equations on full bases,
// route agreements, the section laws, cohomology dimensions, the
// class-vanishing/lifting equivalence, gauge transport, the precomplex
// correction, centrality, and determinism of the whole battery.
std::vector<AcceptanceLine> run_acceptance(std::uint64_t seed);

}  // namespace embrace
