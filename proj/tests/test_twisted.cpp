#include "doctest.h"

#include "embrace/corpus.hpp"
#include "embrace/twisted.hpp"

#include <random>

using namespace embrace;

namespace {

// Base copy e0 plus the four x-power windows, optionally the curved window.
WindowCategory dual_windows(const Corpus& c, bool with_precomplex) {
    const QuiverPtr& q = c.dual.quiver;
    ObjId e = *q->find_object("e");
    std::vector<TwistedObject> objs;
    objs.push_back(base_copy(*q, e, "e0"));
    for (const auto& w : c.x_windows) objs.push_back(window_object(*q, w));
    if (with_precomplex) objs.push_back(window_object(*q, c.precomplex_window));
    return build_pcom(c.dual, objs);
}

ObjId obj_of(const WindowCategory& wc, const std::string& name) {
    auto o = wc.category.quiver->find_object(name);
    REQUIRE(o.has_value());
    return *o;
}

}  // namespace

TEST_CASE("window objects: summand shifts and slot degrees") {
    Corpus c = make_corpus(FieldSpec::rational());
    const GradedQuiver& base = *c.dual.quiver;
    ObjId e = *base.find_object("e");
    ArrowId one = *base.find_arrow(e, e, "one");
    ArrowId x = *base.find_arrow(e, e, "x");

    TwistedObject x3 = window_object(base, c.x_windows[2]);
    REQUIRE(x3.carrier.summands.size() == 3);
    for (int p = 0; p < 3; ++p) {
        CHECK(x3.carrier.summands[static_cast<std::size_t>(p)].shift == -p);
        CHECK(x3.carrier.summands[static_cast<std::size_t>(p)].object == e);
    }

    TwCollection tw(c.dual.quiver, {x3});
    ObjId w = *tw.quiver()->find_object("x3");
    // entry (p, q) of a degree-0 base arrow carries degree q - p
    auto a01 = tw.find_slot(w, w, 0, 1, x);
    auto a10 = tw.find_slot(w, w, 1, 0, x);
    auto a02 = tw.find_slot(w, w, 0, 2, one);
    REQUIRE(a01.has_value());
    REQUIRE(a10.has_value());
    REQUIRE(a02.has_value());
    CHECK(tw.quiver()->arrow(*a01).degree == 1);
    CHECK(tw.quiver()->arrow(*a10).degree == -1);
    CHECK(tw.quiver()->arrow(*a02).degree == 2);

    // the canonical twist cochain has internal degree 1 and collects delta
    const Cochain& d = tw.delta_cochain();
    CHECK(d.arity() == 0);
    CHECK(d.internal_degree() == 1);
    CHECK(d.value(CochainKey{{w}, {}}) ==
          LinComb{{*a01, Scalar::one(base.field())},
                  {*tw.find_slot(w, w, 1, 2, x), Scalar::one(base.field())}});
}

TEST_CASE("shifting a window moves positions and negates the twist") {
    Corpus c = make_corpus(FieldSpec::rational());
    const GradedQuiver& base = *c.dual.quiver;
    ComplexWindow s = shift_window(base, c.x_windows[1], 1);  // x2 shifted once
    CHECK(s.lo == c.x_windows[1].lo - 1);
    CHECK(s.hi == c.x_windows[1].hi - 1);
    REQUIRE(s.delta.size() == 1);
    const auto& [pq, val] = *s.delta.begin();
    CHECK(pq.first == -1);
    CHECK(pq.second == 0);
    ObjId e = *base.find_object("e");
    ArrowId x = *base.find_arrow(e, e, "x");
    CHECK(val == LinComb{{x, -Scalar::one(base.field())}});

    // shifting back restores the original window data
    ComplexWindow back = shift_window(base, s, -1);
    CHECK(back.lo == c.x_windows[1].lo);
    CHECK(back.delta == c.x_windows[1].delta);
}

TEST_CASE("intrinsic local nilpotence: window twists yes, a self-loop no") {
    Corpus c = make_corpus(FieldSpec::prime(7));
    for (const auto& w : c.x_windows) {
        TwistedObject obj = window_object(*c.dual.quiver, w);
        IlnReport rep = is_iln(obj.delta, static_cast<int>(obj.carrier.summands.size()));
        CHECK(rep.iln);
        CHECK(rep.nilpotence <= static_cast<int>(obj.carrier.summands.size()));
    }

    ObjId e = *c.dual.quiver->find_object("e");
    ArrowId x = *c.dual.quiver->find_arrow(e, e, "x");
    FreeMorphism loop;
    loop.add(0, 0, x, Scalar::one(FieldSpec::prime(7)));
    CHECK_FALSE(is_iln(loop, 1).iln);
}

TEST_CASE("compose_free composes second after first") {
    Corpus c = make_corpus(FieldSpec::rational());
    const GradedQuiver& base = *c.dual.quiver;
    const FieldSpec& f = base.field();
    ObjId e = *base.find_object("e");
    ArrowId one = *base.find_arrow(e, e, "one");
    ArrowId x = *base.find_arrow(e, e, "x");
    const Cochain& m = *c.dual.mu.part(2);

    FreeMorphism fst, snd;
    fst.add(0, 1, x, Scalar::one(f));
    snd.add(1, 2, one, Scalar::one(f));

    FreeMorphism chained = compose_free(m, fst, snd);  // snd after fst: 0 -> 1 -> 2
    REQUIRE(chained.entries.size() == 1);
    CHECK(chained.entries.begin()->first == std::make_pair(0, 2));
    CHECK(chained.entries.begin()->second == LinComb{{x, Scalar::one(f)}});

    CHECK(compose_free(m, snd, fst).is_zero());  // fst after snd has no matching chain
}

TEST_CASE("the curved window has curvature -1 at the long slot") {
    Corpus c = make_corpus(FieldSpec::rational());
    const FieldSpec& f = c.dual.quiver->field();
    ObjId e = *c.dual.quiver->find_object("e");
    ArrowId one = *c.dual.quiver->find_arrow(e, e, "one");
    WindowCategory wc = dual_windows(c, /*with_precomplex=*/true);
    ObjId pre = obj_of(wc, "ones3");

    const Cochain* curv = wc.category.mu.part(0);
    REQUIRE(curv != nullptr);
    auto slot = wc.collection.find_slot(pre, pre, 0, 2, one);
    REQUIRE(slot.has_value());
    CHECK(curvature_at(*curv, pre) == LinComb{{*slot, -Scalar::one(f)}});

    // all x-power windows are honest complexes: no curvature there
    for (const std::string& nm : {"x1", "x2", "x3", "x4"})
        CHECK(lincomb_is_zero(curvature_at(*curv, obj_of(wc, nm))));

    CHECK(wc.category.kind == StructureKind::Cdg);
}

TEST_CASE("complex-only collections carry a differential structure; curved input is rejected") {
    Corpus c = make_corpus(FieldSpec::rational());
    const QuiverPtr& q = c.dual.quiver;
    ObjId e = *q->find_object("e");
    std::vector<TwistedObject> objs;
    objs.push_back(base_copy(*q, e, "e0"));
    for (const auto& w : c.x_windows) objs.push_back(window_object(*q, w));
    WindowCategory com = build_com(c.dual, objs);
    CHECK(com.category.kind == StructureKind::Dg);
    CHECK(com.category.mu.part(0) == nullptr);

    std::vector<TwistedObject> curved;
    curved.push_back(window_object(*q, c.precomplex_window));
    CHECK_THROWS(build_com(c.dual, curved));
}

TEST_CASE("the section is inverted by the projection and matches the closed form") {
    Corpus c = make_corpus(FieldSpec::prime(5));
    WindowCategory wc = dual_windows(c, /*with_precomplex=*/true);
    const TwCollection& tw = wc.collection;
    std::mt19937_64 rng(23);

    for (int arity = 0; arity <= 3; ++arity) {
        Cochain phi = random_cochain(tw.base(), arity, 0, rng, 8);
        MixedCochain lifted = embr_delta(tw, phi);
        CHECK(project_base(tw, lifted) == MixedCochain(phi));
        CHECK(zero_part_oracle(tw, MixedCochain(phi)) == lifted.part_or_zero(0));
    }

    CHECK(closed_form_structure(tw, c.dual) == wc.category.mu);
}

TEST_CASE("transported differential is the twist commutator, slot by slot") {
    Corpus c = make_corpus(FieldSpec::rational());
    const FieldSpec& f = c.dual.quiver->field();
    WindowCategory wc = dual_windows(c, /*with_precomplex=*/false);
    const TwCollection& tw = wc.collection;
    const Cochain& m = *c.dual.mu.part(2);

    const Cochain* d1 = wc.category.mu.part(1);
    REQUIRE(d1 != nullptr);
    const GradedQuiver& wq = *tw.quiver();
    for (ArrowId g = 0; g < wq.arrow_count(); ++g) {
        const Arrow& ar = wq.arrow(g);
        // d(g) = delta o g - (-1)^{|g|} g o delta
        FreeMorphism gm = tw.to_matrix(LinComb{{g, Scalar::one(f)}});
        int src_idx = -1, tgt_idx = -1;
        for (std::size_t i = 0; i < tw.objects().size(); ++i) {
            if (tw.objects()[i].carrier.name == wq.object_name(ar.src))
                src_idx = static_cast<int>(i);
            if (tw.objects()[i].carrier.name == wq.object_name(ar.tgt))
                tgt_idx = static_cast<int>(i);
        }
        REQUIRE(src_idx >= 0);
        REQUIRE(tgt_idx >= 0);
        const FreeMorphism& delta_src = tw.objects()[static_cast<std::size_t>(src_idx)].delta;
        const FreeMorphism& delta_tgt = tw.objects()[static_cast<std::size_t>(tgt_idx)].delta;

        LinComb expected = tw.to_lincomb(ar.src, ar.tgt, compose_free(m, gm, delta_tgt));
        lincomb_add(expected, tw.to_lincomb(ar.src, ar.tgt, compose_free(m, delta_src, gm)),
                    SignExponent::of(ar.degree + 1).scalar(f));
        CHECK(d1->value(CochainKey{{ar.src, ar.tgt}, {g}}) == expected);
    }
}
