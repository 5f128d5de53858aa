#pragma once

#include "embrace/brace.hpp"
#include "embrace/sparse.hpp"

#include <optional>

namespace embrace {

// Differential at the suspended level: bracket with the structure element b,
// d(x) = b{x} − (−1)^{|b||x|} x{b}.
MixedCochain differential_susp(const MixedCochain& b, const MixedCochain& x);

// Differential on base-level cochains, routed through suspension.
MixedCochain hochschild_differential(const MixedCochain& b, const MixedCochain& phi);
MixedCochain hochschild_differential(const MixedCochain& b, const Cochain& phi);

// Independent base-level route: commutator of the insertion product with the
// total structure cochain, [μ, φ] = μ•φ − (−1)^{(deg μ+1)(deg φ+1)} φ•μ.
MixedCochain commutator_differential(const MixedCochain& mu_base, const MixedCochain& phi);

// The arity-raising contribution [m, φ] alone (m the arity-2 component).
Cochain horizontal_differential(const Cochain& m, const Cochain& phi);

// Textbook bar-complex differential for degree-zero linear categories,
// implemented directly from the alternating-sum formula with no use of the
// brace engine; serves as an independent oracle.
Cochain classical_differential(const Cochain& m, const Cochain& phi);

// Arity-0 projection and section, and the diagonal action of the structure's
// arity-1 component on the zero part (all at the caller's level).
Cochain project_zero(const MixedCochain& x);
MixedCochain sigma_zero(const Cochain& x0);
// b1_delta expects suspended inputs: applies b's arity-1 part to x0's values.
Cochain b1_delta(const MixedCochain& b, const Cochain& x0);

// Ordered basis of the base-level slice of one Hochschild degree,
// ⊕_{arity a ≤ arity_max} C^{a, degree−a}.
class HochschildBasis {
public:
    HochschildBasis(QuiverPtr q, int hoch_degree, int arity_max);

    const QuiverPtr& quiver() const { return quiver_; }
    int hoch_degree() const { return degree_; }
    int dimension() const { return dimension_; }
    const std::vector<std::pair<int, CochainBasis>>& components() const { return components_; }

    Vec coordinates(const MixedCochain& phi) const;
    MixedCochain from_coordinates(const Vec& coords) const;

private:
    QuiverPtr quiver_;
    int degree_ = 0;
    int dimension_ = 0;
    std::vector<std::pair<int, CochainBasis>> components_;
};

// Matrix of φ ↦ hochschild_differential(b, φ) in the given bases
// (codomain dimension × domain dimension, acting on coordinate columns).
SparseMatrix differential_matrix(const MixedCochain& b, const HochschildBasis& domain,
                                 const HochschildBasis& codomain);

struct CohomologyResult {
    int dimension = 0;
    int cocycle_dim = 0;
    int coboundary_dim = 0;
    std::vector<MixedCochain> representatives;
};

// Cohomology of one Hochschild degree; arity_max bounds the cochain slices on
// either side (for degree-zero quivers arity = degree is the only live slice).
CohomologyResult hochschild_cohomology(const MixedCochain& b, int degree, int arity_max);

// Is phi a coboundary?  Returns a preimage with d(ψ) = φ if one exists.
std::optional<MixedCochain> coboundary_witness(const MixedCochain& b, const MixedCochain& phi,
                                               int arity_max);

}  // namespace embrace
