#include "doctest.h"

#include "embrace/brace.hpp"
#include "embrace/corpus.hpp"

#include <random>

using namespace embrace;

TEST_CASE("degree bookkeeping on the distinguished cocycle") {
    Corpus c = make_corpus(FieldSpec::rational());
    CHECK(c.phi.arity() == 2);
    CHECK(c.phi.internal_degree() == 0);
    CHECK(c.phi.hochschild_degree() == 2);
    CHECK(c.phi.suspended_degree() == 1);
    Cochain s = suspend(c.phi);
    CHECK(s.level() == Level::Suspended);
    CHECK(s.degree() == 1);
    CHECK(s.internal_degree() == 0);
}

TEST_CASE("suspension round-trips on random graded cochains") {
    StructuredCategory tern = ternary_example(FieldSpec::rational());
    std::mt19937_64 rng(42);
    for (int arity = 0; arity <= 3; ++arity)
        for (int deg : {-2, -1, 0, 1, 2}) {
            Cochain c = random_cochain(tern.quiver, arity, deg, rng, 8);
            CHECK(unsuspend(suspend(c)) == c);
            CHECK(suspend(unsuspend(suspend(c))) == suspend(c));
        }

    Corpus corpus = make_corpus(FieldSpec::prime(7));
    for (int arity = 0; arity <= 4; ++arity) {
        Cochain c = random_cochain(corpus.dual.quiver, arity, 0, rng, 8);
        CHECK(unsuspend(suspend(c)) == c);
    }
}

TEST_CASE("brace edge cases: empty insertion copies, overfull insertion vanishes") {
    Corpus c = make_corpus(FieldSpec::rational());
    Cochain s = suspend(c.phi);
    CHECK(brace(s, {}) == s);
    Cochain y = suspend(c.psi);
    CHECK(brace(s, {y, y, y}).is_zero());  // three insertions into two slots
    // φ kills identity arguments and ψ only produces identities, so this
    // genuinely vanishes even though the arities fit.
    CHECK(brace(s, {y, y}).is_zero());
    // Inserting φ into the multiplication survives: on (one, x, x) only the
    // term μ(one, φ(x, x)) = one contributes.
    CHECK_FALSE(brace(suspend(*c.dual.mu.part(2)), {s}).is_zero());
}

TEST_CASE("brace rejects mismatched levels") {
    Corpus c = make_corpus(FieldSpec::rational());
    CHECK_THROWS(brace(c.phi, {suspend(c.psi)}));  // base-level outer cochain
}

TEST_CASE("the associative composition is a cocycle for its own structure") {
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
        Corpus c = make_corpus(f);
        CHECK(hochschild_differential(c.dual.b, *c.dual.mu.part(2)).is_zero());
        CHECK(hochschild_differential(c.path.b, *c.path.mu.part(2)).is_zero());
    }
}

TEST_CASE("insertion product agrees with the suspended brace on seeded samples") {
    Corpus c = make_corpus(FieldSpec::prime(7));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 12; ++t) {
        std::uniform_int_distribution<int> dphi(1, 3), dpsi(0, 3);
        Cochain phi = random_cochain(c.dual.quiver, dphi(rng), 0, rng, 8);
        Cochain psi = random_cochain(c.dual.quiver, dpsi(rng), 0, rng, 8);
        CHECK(dot(phi, psi) == unsuspend(brace(suspend(phi), {suspend(psi)})));
    }
}

TEST_CASE("lie bracket is the graded commutator of braces") {
    StructuredCategory tern = ternary_example(FieldSpec::rational());
    std::mt19937_64 rng(11);
    const FieldSpec& f = tern.quiver->field();
    for (int t = 0; t < 8; ++t) {
        Cochain x = suspend(random_cochain(tern.quiver, 2, 1, rng, 6));
        Cochain y = suspend(random_cochain(tern.quiver, 1, -1, rng, 6));
        Cochain commutator =
            brace(x, {y}) -
            brace(y, {x}).scaled(koszul_swap_sign(x.degree(), y.degree()).scalar(f));
        CHECK(lie_bracket(x, y) == commutator);
        // graded antisymmetry follows: <y,x> = -(-1)^{|x||y|} <x,y>
        CHECK(lie_bracket(y, x) ==
              lie_bracket(x, y).scaled(-koszul_swap_sign(x.degree(), y.degree()).scalar(f)));
    }
}

TEST_CASE("cochain basis coordinates round-trip") {
    Corpus c = make_corpus(FieldSpec::rational());
    CochainBasis basis(c.dual.quiver, 2, 0);
    CHECK(basis.dimension() == 8);  // 4 argument pairs x 2 value arrows
    Vec coords = basis.coordinates(c.phi);
    CHECK(basis.from_coordinates(coords) == c.phi);
    int nonzero = 0;
    for (const Scalar& s : coords)
        if (!s.is_zero()) ++nonzero;
    CHECK(nonzero == 1);
}
