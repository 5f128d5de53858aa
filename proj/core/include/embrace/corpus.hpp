#pragma once

#include "embrace/deformation.hpp"

namespace embrace {

// Shared example instances used by the verification suites, the tests and the
// shipped data files.  Builders are parametric in the field so the same
// instances run over the rationals and over prime fields.

// One object `e` with hom spanned by `one` (the identity) and `x` in degree 0,
// subject to x·x = 0.
StructuredCategory dual_numbers_category(const FieldSpec& f);

// Two objects `1`, `2` with identities `e1`, `e2` and a single arrow
// `u`: 1 → 2 (all degree 0).
StructuredCategory a2_path_category(const FieldSpec& f);

// One object with `x` in degree 1 and `y` in degree 2; the only operation is
// ternary and sends x⊗x⊗x to y.
StructuredCategory ternary_example(const FieldSpec& f);

// The degree-2 cocycle on the dual-numbers category with value 1 on (x, x)
// and 0 whenever an argument is the identity.
Cochain phi_one(const StructuredCategory& dual);

// The degree-1 element with value 1 on x and 0 on the identity.
Cochain psi_one(const StructuredCategory& dual);

// Window 0..len−1 over the dual-numbers object with multiplication by x as
// every differential step (a complex, since x² = 0).
ComplexWindow x_complex(const StructuredCategory& dual, int len, const std::string& name);

// Three positions over the dual-numbers object with the identity arrow as
// both steps: the square is nonzero, a genuine precomplex with curvature −1.
ComplexWindow identity_precomplex(const StructuredCategory& dual);

// Windows over the path category.
ComplexWindow a2_u_complex(const StructuredCategory& path_cat);        // 1 →u 2
ComplexWindow a2_three_term(const StructuredCategory& path_cat);      // 1 →u 2 →0 2

struct Corpus {
    StructuredCategory dual;                // dual numbers
    StructuredCategory path;                // A₂ path category
    Cochain phi;                            // degree-2 cocycle on `dual`
    Cochain psi;                            // degree-1 gauge element on `dual`
    std::vector<ComplexWindow> x_windows;   // lengths 1..4 over `dual`
    ComplexWindow precomplex_window;        // identity predifferential
    std::vector<ComplexWindow> path_windows;
};

Corpus make_corpus(const FieldSpec& f);

}  // namespace embrace
