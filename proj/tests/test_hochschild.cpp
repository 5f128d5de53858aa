#include "doctest.h"

#include "embrace/corpus.hpp"
#include "embrace/hochschild.hpp"

#include <random>

using namespace embrace;

namespace {

// Frozen hand-computed values on the dual-numbers category: e, arrows one, x.
struct Dual {
    Corpus c;
    ObjId e;
    ArrowId one;
    ArrowId x;
    explicit Dual(const FieldSpec& f)
        : c(make_corpus(f)),
          e(*c.dual.quiver->find_object("e")),
          one(*c.dual.quiver->find_arrow(e, e, "one")),
          x(*c.dual.quiver->find_arrow(e, e, "x")) {}
};

}  // namespace

TEST_CASE("the distinguished degree-2 element is a cocycle") {
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(7)}) {
        Corpus c = make_corpus(f);
        CHECK(hochschild_differential(c.dual.b, c.phi).is_zero());
    }
}

TEST_CASE("d(psi)(x, x) = 2x, frozen by hand") {
    Dual d(FieldSpec::rational());
    const FieldSpec& f = d.c.dual.quiver->field();
    MixedCochain dpsi = hochschild_differential(d.c.dual.b, d.c.psi);
    Cochain part = dpsi.part_or_zero(2);
    CHECK(dpsi.parts().size() == 1);

    LinComb got = part.value(CochainKey{{d.e, d.e, d.e}, {d.x, d.x}});
    LinComb expected{{d.x, Scalar::from_int(f, 2)}};
    CHECK(got == expected);
    // every other argument pair maps to zero
    CHECK(part.value(CochainKey{{d.e, d.e, d.e}, {d.one, d.x}}).empty());
    CHECK(part.value(CochainKey{{d.e, d.e, d.e}, {d.x, d.one}}).empty());
    CHECK(part.value(CochainKey{{d.e, d.e, d.e}, {d.one, d.one}}).empty());
}

TEST_CASE("the failed cocycle phi(x, one) = one has d = -one on (x, one, one)") {
    Dual d(FieldSpec::rational());
    const FieldSpec& f = d.c.dual.quiver->field();
    Cochain bad(d.c.dual.quiver, Level::Base, 2, 0);
    bad.add(CochainKey{{d.e, d.e, d.e}, {d.x, d.one}}, d.one, Scalar::one(f));

    MixedCochain dbad = hochschild_differential(d.c.dual.b, bad);
    CHECK_FALSE(dbad.is_zero());
    LinComb got = dbad.part_or_zero(3).value(CochainKey{{d.e, d.e, d.e, d.e}, {d.x, d.one, d.one}});
    LinComb expected{{d.one, -Scalar::one(f)}};
    CHECK(got == expected);
}

TEST_CASE("on the two-object path category d(gamma_{e1})(u) = -u") {
    Corpus c = make_corpus(FieldSpec::rational());
    const QuiverPtr& q = c.path.quiver;
    const FieldSpec& f = q->field();
    ObjId o1 = *q->find_object("1");
    ObjId o2 = *q->find_object("2");
    ArrowId e1 = *q->find_arrow(o1, o1, "e1");
    ArrowId e2 = *q->find_arrow(o2, o2, "e2");
    ArrowId u = *q->find_arrow(o1, o2, "u");

    Cochain gamma(q, Level::Base, 0, 0);
    gamma.add(CochainKey{{o1}, {}}, e1, Scalar::one(f));
    MixedCochain dg = hochschild_differential(c.path.b, gamma);
    Cochain part = dg.part_or_zero(1);

    CHECK(part.value(CochainKey{{o1, o2}, {u}}) == LinComb{{u, -Scalar::one(f)}});
    CHECK(part.value(CochainKey{{o1, o1}, {e1}}).empty());
    CHECK(part.value(CochainKey{{o2, o2}, {e2}}).empty());
}

TEST_CASE("horizontal, commutator and suspended differential routes agree") {
    Corpus c = make_corpus(FieldSpec::prime(5));
    const Cochain& m = *c.dual.mu.part(2);
    const FieldSpec& f = c.dual.quiver->field();
    std::mt19937_64 rng(3);
    for (int p = 0; p <= 3; ++p) {
        Cochain phi = random_cochain(c.dual.quiver, p, 0, rng, 8);
        Cochain horizontal = horizontal_differential(m, phi);
        Cochain classical = classical_differential(m, phi);
        CHECK(horizontal == classical.scaled(SignExponent::of(p + 1).scalar(f)));
        MixedCochain d = hochschild_differential(c.dual.b, phi);
        CHECK(d.part_or_zero(p + 1) == horizontal);
        CHECK(commutator_differential(c.dual.mu, MixedCochain(phi)) == d);
    }
}

TEST_CASE("projection/section of the zero part and the diagonal action") {
    StructuredCategory tern = ternary_example(FieldSpec::rational());
    std::mt19937_64 rng(17);
    for (int j : {-1, 0, 1, 2}) {
        Cochain x0 = suspend(random_cochain(tern.quiver, 0, j, rng, 8));
        MixedCochain sig = sigma_zero(x0);
        CHECK(project_zero(sig) == x0);
        CHECK(b1_delta(tern.b, x0) ==
              project_zero(differential_susp(tern.b, sig)));
    }
}

TEST_CASE("frozen cohomology dimensions of the two base categories") {
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(3)}) {
        Corpus c = make_corpus(f);
        const std::vector<int> dual_dims{2, 1, 1};
        const std::vector<int> path_dims{1, 0, 0};
        for (int p = 0; p <= 2; ++p) {
            CohomologyResult rd = hochschild_cohomology(c.dual, p, 4);
            CHECK(rd.dimension == dual_dims[static_cast<std::size_t>(p)]);
            CHECK(rd.cocycle_dim - rd.coboundary_dim == rd.dimension);
            for (const MixedCochain& rep : rd.representatives)
                CHECK(hochschild_differential(c.dual.b, rep).is_zero());

            CohomologyResult rp = hochschild_cohomology(c.path, p, 4);
            CHECK(rp.dimension == path_dims[static_cast<std::size_t>(p)]);
        }
    }
}

TEST_CASE("coboundary solver inverts the differential") {
    Corpus c = make_corpus(FieldSpec::rational());
    MixedCochain dpsi = hochschild_differential(c.dual.b, c.psi);
    auto w = coboundary_witness(c.dual.b, dpsi, 4);
    REQUIRE(w.has_value());
    CHECK(hochschild_differential(c.dual.b, *w) == dpsi);
    // the cocycle itself is not a coboundary (it represents a nonzero class)
    CHECK_FALSE(coboundary_witness(c.dual.b, MixedCochain(c.phi), 4).has_value());
}
