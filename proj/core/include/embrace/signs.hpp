#pragma once

#include <map>
#include <vector>

#include "embrace/quiver.hpp"

namespace embrace {

// A sign exponent mod 2.  Every sign in the engine is produced by the two
// generators below (plus the suspension wrapper); no other code writes sign
// literals.
struct SignExponent {
    int parity = 0;  // 0 or 1

    static SignExponent of(long long e) { return SignExponent{static_cast<int>(((e % 2) + 2) % 2)}; }
    SignExponent operator+(const SignExponent& o) const { return SignExponent{(parity + o.parity) & 1}; }
    bool negative() const { return parity == 1; }
    Scalar scalar(const FieldSpec& f) const {
        return negative() ? -Scalar::one(f) : Scalar::one(f);
    }
    // multiplies target by (-1)^parity
    Scalar apply(const Scalar& s) const { return negative() ? -s : s; }
};

// Sign of swapping two homogeneous elements past each other: (-1)^{|m||n|}.
SignExponent koszul_swap_sign(int deg_m, int deg_n);

// Fault injection for integration tests only: when enabled, koszul_swap_sign
// reports +1 unconditionally, silently corrupting every sign table built on
// it.  Exists so tests can demonstrate that the verification suites detect a
// broken sign convention instead of passing vacuously.
namespace fault {
void corrupt_koszul_signs(bool enabled);
bool koszul_signs_corrupted();
}  // namespace fault

// Sign of the canonical isomorphism that distributes shift functors over a hom
// of tensor products,
//   [M_1 (x) ... (x) M_n, M]  ->  [S^{s_1}M_1 (x) ... (x) S^{s_n}M_n, S^i M],
// evaluated on a map of degree deg_phi applied to arguments of (unshifted)
// degrees m_1..m_n listed in tensor order (leftmost factor first):
//   alpha = (s_1+...+s_n)*deg_phi + sum_{l>=2} s_l*(m_1+...+m_{l-1}).
// The target shift i does not enter alpha; it is part of the signature only.
SignExponent canonical_iso_sign(int i, const std::vector<int>& shifts, int deg_phi,
                                const std::vector<int>& tensor_arg_degrees);

// Sign identifying an arity-n cochain of internal degree i with its suspended
// form (all shifts 1).  Argument degrees are given in path order (earliest
// arrow first); the exponent works out to n*i + sum_{l=2..n} (l-1)*deg(f_l).
SignExponent suspension_sign(int arity, int internal_degree, const std::vector<int>& path_arg_degrees);

// Degree-p linear self-map of one hom space, given by images of basis arrows.
struct GradedMorphism {
    ObjId src = 0;
    ObjId tgt = 0;
    int degree = 0;
    std::map<ArrowId, LinComb> coeffs;
};

// Validates endpoints and homogeneity (image arrows live in the same hom space
// with degree raised by the morphism degree).
void validate_graded_morphism(const GradedQuiver& q, const GradedMorphism& f);

// Applies f_1 (x) ... (x) f_r to a basis tensor (both in tensor order), with the
// Koszul rule: each f_l picks up koszul_swap_sign(deg f_l, deg of every argument
// to its left).  Mismatched hom spaces are an error.
std::map<std::vector<ArrowId>, Scalar> tensor_apply(const GradedQuiver& q,
                                                    const std::vector<GradedMorphism>& fs,
                                                    const std::vector<ArrowId>& tensor);

}  // namespace embrace
