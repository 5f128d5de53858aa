#pragma once

#include "embrace/hochschild.hpp"
#include "embrace/twisted.hpp"

#include <optional>

namespace embrace {

// ---------------------------------------------------------------------------
// Hom-complex cohomology inside a window category
// ---------------------------------------------------------------------------

// Cohomology of the hom complex between two window objects in one degree: the
// arity-1 structure component acts as the differential on graded hom values.
struct HomCohomology {
    int dimension = 0;
    int cocycle_dim = 0;
    int coboundary_dim = 0;
    std::vector<LinComb> representatives;  // degree-n values from c to d
};

// Requires the differential to square to zero on this hom space (both
// endpoint objects curvature-free); throws otherwise.
HomCohomology hom_cohomology(const StructuredCategory& cat, ObjId c, ObjId d, int n);

// Solve d(h) = v inside hom(c, d); v must be homogeneous.  Returns the
// free-variables-zero solution, or nullopt iff v is not a coboundary.
std::optional<LinComb> hom_coboundary_witness(const StructuredCategory& cat, ObjId c, ObjId d,
                                              const LinComb& v);

// Class equality in the homotopy category: u − v is a coboundary.
bool hom_classes_equal(const StructuredCategory& cat, ObjId c, ObjId d, const LinComb& u,
                       const LinComb& v);

// ---------------------------------------------------------------------------
// First-order deformations and gauge
// ---------------------------------------------------------------------------

// A structured category together with a degree-2 cocycle: the deformation
// (a[ε], μ + φε) over k[ε]/(ε²).
struct FirstOrderDeformation {
    StructuredCategory base;
    MixedCochain cocycle;  // base level, Hochschild degree 2, d(cocycle) = 0
};

// Verifies the cocycle condition exactly; throws with the offending arity
// component otherwise.
FirstOrderDeformation make_deformation(const StructuredCategory& base,
                                       const MixedCochain& cocycle);
FirstOrderDeformation make_deformation(const StructuredCategory& base, const Cochain& cocycle);

// The deformed structure, stored as (constant part, ε part).  Construction
// re-derives the structure equation modulo ε²: the ε⁰ part is the base
// structure equation and the ε¹ part is the cocycle condition, both expanded
// through the brace and required to vanish exactly.
struct DeformedCategory {
    FirstOrderDeformation def;
    MixedCochain mu_constant;  // the undeformed structure
    MixedCochain mu_eps;       // the ε coefficient
};

DeformedCategory deform_category(const FirstOrderDeformation& def);

// Gauge action: h of Hochschild degree 1 carries φ to φ + d(h); the morphism
// 1 + hε is an isomorphism of deformations iff d(h) = φ' − φ.
struct GaugeOutcome {
    bool success = false;
    MixedCochain residual;  // d(h) − (φ' − φ); zero iff success
};

GaugeOutcome gauge_apply(const FirstOrderDeformation& from, const FirstOrderDeformation& to,
                         const MixedCochain& h);

// Search for a gauge element by solving the coboundary equation.
std::optional<MixedCochain> find_gauge(const FirstOrderDeformation& from,
                                       const FirstOrderDeformation& to, int arity_max);

// ---------------------------------------------------------------------------
// Characteristic values and obstructions on window objects
// ---------------------------------------------------------------------------

// The degree-2 endomorphism value attached to a window object by a
// deformation cocycle, with its class in the homotopy category.  Two
// independent routes are compared: the brace section followed by the arity-0
// projection, and the direct matrix contraction of the cocycle with the
// twist (valid over degree-0 bases, where every twist entry drops the shift
// by exactly one).
struct HomotopyClassReport {
    ObjId object = 0;
    LinComb representative;           // brace-section route
    LinComb direct;                   // matrix-contraction route
    bool routes_agree = false;
    bool vanishes = false;            // representative is a coboundary
    std::optional<LinComb> bounding;  // h with d(h) = representative
};

// The window object must be a complex (curvature-free); the deformation must
// live on the collection's base, and the base must sit in degree 0.
HomotopyClassReport characteristic_value(const WindowCategory& wc,
                                         const FirstOrderDeformation& def, ObjId window_obj);

// Lift search: a degree-1 endomorphism correction δ' with
// δδ' + δ'δ = (the characteristic representative), the condition for the
// ε-corrected twist to stay square-zero under the deformed composition.
struct ObstructionReport {
    ObjId object = 0;
    LinComb representative;
    bool vanishes = false;                // the characteristic class is zero
    std::optional<FreeMorphism> witness;  // δ' solving the lift equation
    bool theorem_holds = false;           // class vanishing ⟺ lift feasibility,
                                          // with both value routes agreeing
    int lift_space_dim = 0;               // dim H¹ of the endomorphism complex
    int system_rank = 0;                  // rank of the lift system
    int augmented_rank = 0;               // rank of [system | rhs]
};

ObstructionReport obstruction_and_lift(const WindowCategory& wc, const FirstOrderDeformation& def,
                                       ObjId window_obj);

// ---------------------------------------------------------------------------
// Centrality, the precomplex identity, the deformable locus
// ---------------------------------------------------------------------------

// A chain map between window objects: a homogeneous hom value killed by the
// structure differential.
struct ChainMap {
    ObjId src = 0;
    ObjId tgt = 0;
    LinComb value;
};

struct CentralityPair {
    ObjId src = 0;
    ObjId tgt = 0;
    bool pass = false;
    LinComb residual;                 // χ_D∘f − f∘χ_C
    std::optional<LinComb> homotopy;  // h with d(h) = residual
};

struct CentralityReport {
    bool pass = true;
    std::vector<CentralityPair> pairs;
};

// For each chain map f: C → D, checks that the characteristic values commute
// with f up to an explicit homotopy (degree 2 is even, so no Koszul sign).
// Non-chain-map input throws.
CentralityReport verify_centrality(const WindowCategory& wc, const FirstOrderDeformation& def,
                                   const std::vector<ChainMap>& maps);

// First-order comparison of two twisted-structure routes: lifting the twists
// by Γε inside the deformed base against transporting over trivial lifts.
// The exact identity asserted is  μ̃ = μ̄ + d(Γ)ε  with d taken in the
// undeformed window structure; Γ itself is then the gauge between the two.
struct PrecomplexReport {
    bool identity_holds = false;
    bool constant_part_matches = false;  // ε⁰ part of the lifted route = μ̄
    MixedCochain mu_tilde_eps;           // ε part of the Γ-lifted structure
    MixedCochain mu_bar_eps;             // ε part over trivial lifts
    MixedCochain correction;             // d(Γ) in the undeformed structure
};

// gamma: arity-0, base-level, internal degree 1 cochain on the window quiver
// (one degree-1 endomorphism per window object).
PrecomplexReport verify_precomplexes(const WindowCategory& wc, const FirstOrderDeformation& def,
                                     const Cochain& gamma);

// Partition of window objects by vanishing of the characteristic class,
// cross-checked against lift feasibility object by object.
struct LocusReport {
    std::vector<ObjId> deformable;
    std::vector<ObjId> obstructed;
    bool consistent = false;  // class vanishing matched lift feasibility everywhere
};

LocusReport phi_infinity_locus(const WindowCategory& wc, const FirstOrderDeformation& def,
                               const std::vector<ObjId>& candidates);

// Remove the curvature component of a degree-2 cochain on a window category
// by a gauge: solves (d h)₀ = (φ')₀ over arity-0 degree-1 elements and
// returns the corrected representative φ' − d(h).
struct NormalizeReport {
    bool success = false;
    Cochain gauge;           // arity-0, internal degree 1
    MixedCochain corrected;  // φ' − d(gauge); curvature part zero on success
};

NormalizeReport normalize_zero_part(const StructuredCategory& cat, const MixedCochain& phi_prime);

// Hochschild cohomology of a structured category in one degree (wrapper over
// the suspended-structure computation).
CohomologyResult hochschild_cohomology(const StructuredCategory& cat, int degree, int arity_max);

}  // namespace embrace
