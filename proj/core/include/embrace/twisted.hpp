#pragma once

#include "embrace/structure.hpp"

#include <optional>
#include <set>

namespace embrace {

// One shifted copy of a base object inside a formal direct sum.
struct Summand {
    int shift = 0;
    ObjId object = 0;
};

// Formal finite direct sum of shifted base objects.
struct FreeObject {
    std::string name;
    std::vector<Summand> summands;
};

// Morphism between free objects: a matrix of base hom values indexed by
// (source summand, target summand).  The entry (p,q) with base degree |g|
// carries degree |g| − (shift_q − shift_p) in the free quiver.
struct FreeMorphism {
    std::map<std::pair<int, int>, LinComb> entries;

    void add(int src_summand, int tgt_summand, ArrowId base_arrow, const Scalar& coeff);
    bool is_zero() const;
};

// A free object twisted by a degree-1 endomorphism.
struct TwistedObject {
    FreeObject carrier;
    FreeMorphism delta;
};

// Indices reachable from `from` through nonzero matrix entries.
std::set<int> phi_reach(const FreeMorphism& f, const std::set<int>& from);

struct IlnReport {
    bool iln = false;
    int nilpotence = 0;  // least N with the N-fold reach of the full index set empty
};

// Intrinsic local nilpotence of a square matrix: for finite index sets this is
// acyclicity of the support digraph.
IlnReport is_iln(const FreeMorphism& f, int index_count);

// Complex in cohomological notation: the summand at position p carries shift
// −p; differential entries go from position to position inside [lo, hi].
struct ComplexWindow {
    std::string name;
    int lo = 0;
    int hi = 0;
    std::map<int, ObjId> at;                       // position -> base object
    std::map<std::pair<int, int>, LinComb> delta;  // (from, to) -> base hom value
};

// The twisted object of a window (summands in increasing position order).
TwistedObject window_object(const GradedQuiver& base, const ComplexWindow& w);

// C[k]: positions drop by k and the predifferential picks up (−1)^k.
ComplexWindow shift_window(const GradedQuiver& base, const ComplexWindow& w, int k);

// A base object viewed as a one-summand twisted object with zero twist.
TwistedObject base_copy(const GradedQuiver& base, ObjId obj, const std::string& name);

// Finitely many twisted objects spanning a graded quiver: one quiver object
// per twisted object, one basis arrow per matrix entry slot (p, q, base arrow).
class TwCollection {
  public:
    TwCollection(QuiverPtr base, std::vector<TwistedObject> objects);

    const QuiverPtr& base() const { return base_; }
    const QuiverPtr& quiver() const { return quiver_; }
    const std::vector<TwistedObject>& objects() const { return objects_; }

    struct Slot {
        int src_summand;
        int tgt_summand;
        ArrowId base_arrow;
    };
    const Slot& slot(ArrowId tw_arrow) const { return slots_.at(tw_arrow); }
    std::optional<ArrowId> find_slot(ObjId tw_src, ObjId tw_tgt, int src_summand, int tgt_summand,
                                     ArrowId base_arrow) const;

    // The canonical arity-0 cochain of internal degree 1 collecting every
    // object's twist.
    const Cochain& delta_cochain() const { return *delta_; }
    Cochain delta_susp() const { return suspend(*delta_); }

    LinComb to_lincomb(ObjId tw_src, ObjId tw_tgt, const FreeMorphism& f) const;
    FreeMorphism to_matrix(const LinComb& l) const;

    // Objects that are plain base copies (single summand, shift 0, no twist).
    std::optional<ObjId> base_object_of(ObjId tw_obj) const;

  private:
    QuiverPtr base_;
    QuiverPtr quiver_;
    std::vector<TwistedObject> objects_;
    std::map<ArrowId, Slot> slots_;
    std::optional<Cochain> delta_;
};

// Entrywise extension of a base cochain along summand chains, with the
// canonical-isomorphism sign on the shifts.
Cochain embed_cochain(const TwCollection& tw, const Cochain& phi);
MixedCochain embed_cochain(const TwCollection& tw, const MixedCochain& phi);

// The brace section φ ↦ Σ_k φ̂{δ̂^{⊗k}}; the sum is finite because our mixed
// cochains have finitely many arity components.
MixedCochain embr_delta(const TwCollection& tw, const MixedCochain& phi);
MixedCochain embr_delta(const TwCollection& tw, const Cochain& phi);

// The projection that embr_delta sections: keep entries supported on the
// first plain copy of each base object and read them back on the base quiver.
Cochain project_base(const TwCollection& tw, const Cochain& c);
MixedCochain project_base(const TwCollection& tw, const MixedCochain& c);

// Exponent n·i + j·n(n−1)/2 turning the n-fold insertion of an arity-0
// cochain of internal degree j into the plain diagonal evaluation.
SignExponent lembr_sign(int n, int i, int j);

// Plain diagonal evaluation φ(δ, …, δ) for an arity-0 cochain δ: an arity-0
// cochain whose value at A contracts every slot of φ with δ_A.
Cochain eval_diagonal(const Cochain& phi, const Cochain& delta0);

// Evaluate a cochain multilinearly on explicit hom values along a path
// (no signs; plain substitution).
LinComb evaluate_multilinear(const Cochain& c, const std::vector<ObjId>& path,
                             const std::vector<LinComb>& args);

// Matrix composition second∘first with values multiplied through an arity-2
// base composition (degree-zero bases; no Koszul corrections).
FreeMorphism compose_free(const Cochain& base_m, const FreeMorphism& first,
                          const FreeMorphism& second);

// Windows over a linear base bundled with the transported structure.
struct WindowCategory {
    TwCollection collection;
    StructuredCategory category;
};

// Precomplex category of the given windows: quiver from TwCollection,
// structure embr_delta(μ), validated cdg.  Base copies are not added
// implicitly; include them in `windows` via base_copy when needed.
WindowCategory build_pcom(const StructuredCategory& base_linear,
                          const std::vector<TwistedObject>& objects);

// Complex category: every object must have a square-zero twist; the structure
// is the curvature-free restriction of the precomplex structure.
WindowCategory build_com(const StructuredCategory& base_linear,
                         const std::vector<TwistedObject>& objects);

// Independent closed-form route to the precomplex structure over a
// degree-zero linear base: composition composes entries, the differential is
// the twist commutator δf − (−1)^{|f|}fδ, the curvature is −δ².
MixedCochain closed_form_structure(const TwCollection& tw, const StructuredCategory& base);

// Zero-part oracle: Σ_m (−1)^{m((p−m)+(m−1)/2)} (embedded φ_m)(δ_M^{⊗m}),
// computed by diagonal contraction without any brace machinery.
Cochain zero_part_oracle(const TwCollection& tw, const MixedCochain& phi);

}  // namespace embrace
