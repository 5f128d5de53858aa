#pragma once

#include "embrace/hochschild.hpp"

#include <functional>

namespace embrace {

// Which components the structure cochain is allowed to have:
//   Linear: composition only.  Dg: composition + differential.
//   Cdg: adds curvature.  AInfinity: no curvature, any higher components.
//   AZeroInfinity: unrestricted.
enum class StructureKind { Linear, Dg, Cdg, AInfinity, AZeroInfinity };

std::string kind_name(StructureKind k);
std::optional<StructureKind> parse_kind(const std::string& name);

// A quiver together with a structure cochain μ of Hochschild degree 2 whose
// suspended form b must satisfy b{b} = 0 (checked by check_structure, not
// assumed).  Components: μ_0 curvature, μ_1 differential, μ_2 composition,
// μ_n higher operations.
struct StructuredCategory {
    QuiverPtr quiver;
    StructureKind kind;
    MixedCochain mu;  // base level, Hochschild degree 2
    MixedCochain b;   // suspended form of mu, degree 1

    StructuredCategory(QuiverPtr q, StructureKind k, MixedCochain mu_in);

    const Cochain* curvature() const { return mu.part(0); }
    const Cochain* diff() const { return mu.part(1); }
    const Cochain* composition() const { return mu.part(2); }
};

struct StructureReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
};

// Checks b{b} = 0 (reporting the first nonzero arity component), and when the
// structure has no components above arity 2, the four direct identities:
// the curvature is killed by the differential; the squared differential is the
// negated curvature commutator; the Leibniz rule; associativity.
StructureReport check_structure(const StructuredCategory& cat);

// Full subcategory on the given objects, with the structure restricted.
StructuredCategory restrict_structure(const StructuredCategory& cat,
                                      const std::vector<ObjId>& objects);

// Push a cochain to a full subquiver: keep keys whose paths stay inside, match
// objects and arrows by name.
Cochain restrict_cochain(QuiverPtr sub, const Cochain& c);
MixedCochain restrict_cochain(QuiverPtr sub, const MixedCochain& c);

// Full subcategory on the objects with vanishing curvature component.
StructuredCategory infinity_part(const StructuredCategory& cat);

// Image of the structure under a claimed brace morphism onto target_quiver;
// the result is re-checked and a failure throws.
StructuredCategory transport(const std::function<MixedCochain(const MixedCochain&)>& psi,
                             QuiverPtr target_quiver, StructureKind kind,
                             const StructuredCategory& cat);

struct BraceMorphismReport {
    bool pass = true;
    std::string witness;  // description of the first failing sample
    int samples = 0;
};

// Seeded randomized check that psi (acting on suspended cochains) satisfies
// psi(x{y_1..y_k}) = psi(x){psi(y_1)..psi(y_k)}.  Internal degrees are sampled
// from [deg_lo, deg_hi] intersected with the quiver's support.
BraceMorphismReport is_brace_morphism(const std::function<MixedCochain(const MixedCochain&)>& psi,
                                      QuiverPtr domain, int arity_max, int deg_lo, int deg_hi,
                                      std::uint64_t seed, int samples);

// Direct evaluation helpers used by the identity checks and the closed forms.
LinComb eval_arity1(const Cochain& f, const LinComb& arg);
LinComb eval_arity2(const Cochain& m, const LinComb& low, const LinComb& high);
LinComb curvature_at(const Cochain& c, ObjId obj);

}  // namespace embrace
