#include "doctest.h"

#include "embrace/corpus.hpp"
#include "embrace/deformation.hpp"

#include <algorithm>

using namespace embrace;

namespace {

struct Setup {
    Corpus c;
    WindowCategory wc;
    FirstOrderDeformation def;

    explicit Setup(const FieldSpec& f) : c(make_corpus(f)), wc(build(c)), def(make(c)) {}

    static WindowCategory build(const Corpus& c) {
        const QuiverPtr& q = c.dual.quiver;
        ObjId e = *q->find_object("e");
        std::vector<TwistedObject> objs;
        objs.push_back(base_copy(*q, e, "e0"));
        for (const auto& w : c.x_windows) objs.push_back(window_object(*q, w));
        return build_pcom(c.dual, objs);
    }
    static FirstOrderDeformation make(const Corpus& c) { return make_deformation(c.dual, c.phi); }

    ObjId window(const std::string& name) const {
        auto o = wc.category.quiver->find_object(name);
        REQUIRE(o.has_value());
        return *o;
    }
};

}  // namespace

TEST_CASE("make_deformation accepts cocycles and rejects everything else") {
    Corpus c = make_corpus(FieldSpec::rational());
    CHECK_NOTHROW(make_deformation(c.dual, c.phi));
    CHECK_THROWS(make_deformation(c.dual, c.psi));  // wrong degree

    const QuiverPtr& q = c.dual.quiver;
    ObjId e = *q->find_object("e");
    ArrowId one = *q->find_arrow(e, e, "one");
    ArrowId x = *q->find_arrow(e, e, "x");
    Cochain bad(q, Level::Base, 2, 0);
    bad.add(CochainKey{{e, e, e}, {x, one}}, one, Scalar::one(q->field()));
    CHECK_THROWS(make_deformation(c.dual, bad));  // not closed
}

TEST_CASE("deforming keeps the constant part and stores the cocycle as the epsilon part") {
    Setup s(FieldSpec::prime(7));
    DeformedCategory dc = deform_category(s.def);
    CHECK(dc.mu_constant == s.c.dual.mu);
    CHECK(dc.mu_eps == s.def.cocycle);
}

TEST_CASE("two-term window: class vanishes and the pinned-to-zero lift works") {
    Setup s(FieldSpec::rational());
    ObjId x2 = s.window("x2");

    HomotopyClassReport cls = characteristic_value(s.wc, s.def, x2);
    CHECK(cls.routes_agree);
    CHECK(cls.vanishes);
    CHECK(lincomb_is_zero(cls.representative));

    ObstructionReport ob = obstruction_and_lift(s.wc, s.def, x2);
    CHECK(ob.theorem_holds);
    CHECK(ob.vanishes);
    CHECK(ob.system_rank == ob.augmented_rank);
    REQUIRE(ob.witness.has_value());
    CHECK(ob.witness->is_zero());  // free variables pinned to zero solve it exactly
    CHECK(ob.lift_space_dim == 1);
}

TEST_CASE("three-term window: frozen obstruction representative and ranks") {
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
        Setup s(f);
        ObjId x3 = s.window("x3");
        ObjId e = *s.c.dual.quiver->find_object("e");
        ArrowId one = *s.c.dual.quiver->find_arrow(e, e, "one");
        auto slot = s.wc.collection.find_slot(x3, x3, 0, 2, one);
        REQUIRE(slot.has_value());

        HomotopyClassReport cls = characteristic_value(s.wc, s.def, x3);
        CHECK(cls.routes_agree);
        CHECK_FALSE(cls.vanishes);
        CHECK(cls.representative == LinComb{{*slot, -Scalar::one(f)}});
        CHECK(cls.direct == cls.representative);

        ObstructionReport ob = obstruction_and_lift(s.wc, s.def, x3);
        CHECK(ob.theorem_holds);
        CHECK_FALSE(ob.vanishes);
        CHECK_FALSE(ob.witness.has_value());
        CHECK(ob.system_rank == 1);
        CHECK(ob.augmented_rank == 2);
    }
}

TEST_CASE("hom cohomology dimensions of small endomorphism complexes") {
    Setup s(FieldSpec::rational());
    CHECK(hom_cohomology(s.wc.category, s.window("x2"), s.window("x2"), 1).dimension == 1);
    CHECK(hom_cohomology(s.wc.category, s.window("x3"), s.window("x3"), 2).dimension == 1);
    CHECK(hom_cohomology(s.wc.category, s.window("e0"), s.window("e0"), 1).dimension == 0);
}

TEST_CASE("deformable locus over several fields") {
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(3), FieldSpec::prime(7)}) {
        Setup s(f);
        std::vector<ObjId> candidates;
        for (const std::string& nm : {"e0", "x1", "x2", "x3", "x4"})
            candidates.push_back(s.window(nm));
        LocusReport locus = phi_infinity_locus(s.wc, s.def, candidates);
        CHECK(locus.consistent);
        auto has = [](const std::vector<ObjId>& v, ObjId o) {
            return std::find(v.begin(), v.end(), o) != v.end();
        };
        for (const std::string& nm : {"e0", "x1", "x2"}) CHECK(has(locus.deformable, s.window(nm)));
        for (const std::string& nm : {"x3", "x4"}) CHECK(has(locus.obstructed, s.window(nm)));
    }
}

TEST_CASE("the gauge element psi carries phi to phi + d(psi)") {
    Setup s(FieldSpec::rational());
    MixedCochain dpsi = hochschild_differential(s.c.dual.b, s.c.psi);
    FirstOrderDeformation shifted = make_deformation(s.c.dual, MixedCochain(s.c.phi) + dpsi);

    GaugeOutcome direct = gauge_apply(s.def, shifted, MixedCochain(s.c.psi));
    CHECK(direct.success);
    CHECK(direct.residual.is_zero());

    auto h = find_gauge(s.def, shifted, 4);
    REQUIRE(h.has_value());
    CHECK(gauge_apply(s.def, shifted, *h).success);

    // inequivalent deformations admit no gauge
    FirstOrderDeformation zero =
        make_deformation(s.c.dual, MixedCochain(s.c.dual.quiver, Level::Base, 2));
    CHECK_FALSE(find_gauge(zero, s.def, 4).has_value());

    // and the characteristic classes agree along the gauge
    for (const std::string& nm : {"x2", "x3", "x4"}) {
        ObjId obj = s.window(nm);
        HomotopyClassReport u = characteristic_value(s.wc, s.def, obj);
        HomotopyClassReport v = characteristic_value(s.wc, shifted, obj);
        CHECK(hom_classes_equal(s.wc.category, obj, obj, u.representative, v.representative));
    }
}

TEST_CASE("zero-part normalization succeeds exactly on deformable collections") {
    Corpus c = make_corpus(FieldSpec::rational());
    const QuiverPtr& q = c.dual.quiver;
    ObjId e = *q->find_object("e");
    std::vector<TwistedObject> small_objs;
    small_objs.push_back(base_copy(*q, e, "e0"));
    small_objs.push_back(window_object(*q, c.x_windows[0]));
    small_objs.push_back(window_object(*q, c.x_windows[1]));
    WindowCategory small = build_pcom(c.dual, small_objs);

    MixedCochain lifted = embr_delta(small.collection, MixedCochain(c.phi));
    NormalizeReport ok = normalize_zero_part(small.category, lifted);
    CHECK(ok.success);
    CHECK(ok.corrected.part_or_zero(0).is_zero());

    Setup s(FieldSpec::rational());
    MixedCochain big = embr_delta(s.wc.collection, MixedCochain(s.c.phi));
    CHECK_FALSE(normalize_zero_part(s.wc.category, big).success);
}

TEST_CASE("precomplex comparison: trivial corrections change nothing") {
    Setup s(FieldSpec::prime(5));
    Cochain gamma(s.wc.category.quiver, Level::Base, 0, 1);  // the zero correction
    PrecomplexReport rep = verify_precomplexes(s.wc, s.def, gamma);
    CHECK(rep.identity_holds);
    CHECK(rep.constant_part_matches);
    CHECK(rep.correction.is_zero());
    CHECK(rep.mu_tilde_eps == rep.mu_bar_eps);
}

TEST_CASE("centrality of the characteristic values against simple chain maps") {
    Setup s(FieldSpec::rational());
    const FieldSpec& f = FieldSpec::rational();

    std::vector<ChainMap> maps;
    // identity endomorphisms are chain maps
    for (const std::string& nm : {"x2", "x3"}) {
        ObjId obj = s.window(nm);
        LinComb id;
        ObjId e = *s.c.dual.quiver->find_object("e");
        ArrowId one = *s.c.dual.quiver->find_arrow(e, e, "one");
        int n = nm == "x2" ? 2 : 3;
        for (int p = 0; p < n; ++p)
            lincomb_add(id, *s.wc.collection.find_slot(obj, obj, p, p, one), Scalar::one(f));
        maps.push_back(ChainMap{obj, obj, id});
    }
    CentralityReport rep = verify_centrality(s.wc, s.def, maps);
    CHECK(rep.pass);
    for (const auto& pr : rep.pairs) {
        CHECK(pr.pass);
        CHECK(pr.homotopy.has_value());
    }
}
