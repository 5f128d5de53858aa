#include "embrace/corpus.hpp"

#include <stdexcept>

namespace embrace {

namespace {

ArrowId need_arrow(const GradedQuiver& q, ObjId src, ObjId tgt, const std::string& name) {
    auto a = q.find_arrow(src, tgt, name);
    if (!a) throw std::logic_error("corpus arrow '" + name + "' missing");
    return *a;
}

}  // namespace

StructuredCategory dual_numbers_category(const FieldSpec& f) {
    auto q = std::make_shared<GradedQuiver>(f, 0, 0);
    ObjId e = q->add_object("e");
    ArrowId unit = q->add_arrow("one", e, e, 0);
    ArrowId x = q->add_arrow("x", e, e, 0);
    QuiverPtr qp = q;

    Scalar c1 = Scalar::one(f);
    Cochain m(qp, Level::Base, 2, 0);
    m.add(CochainKey{{e, e, e}, {unit, unit}}, unit, c1);
    m.add(CochainKey{{e, e, e}, {unit, x}}, x, c1);
    m.add(CochainKey{{e, e, e}, {x, unit}}, x, c1);
    // x·x = 0: no entry.
    return StructuredCategory(qp, StructureKind::Linear, MixedCochain(m));
}

StructuredCategory a2_path_category(const FieldSpec& f) {
    auto q = std::make_shared<GradedQuiver>(f, 0, 0);
    ObjId o1 = q->add_object("1");
    ObjId o2 = q->add_object("2");
    ArrowId e1 = q->add_arrow("e1", o1, o1, 0);
    ArrowId e2 = q->add_arrow("e2", o2, o2, 0);
    ArrowId u = q->add_arrow("u", o1, o2, 0);
    QuiverPtr qp = q;

    Scalar c1 = Scalar::one(f);
    Cochain m(qp, Level::Base, 2, 0);
    m.add(CochainKey{{o1, o1, o1}, {e1, e1}}, e1, c1);
    m.add(CochainKey{{o2, o2, o2}, {e2, e2}}, e2, c1);
    m.add(CochainKey{{o1, o1, o2}, {e1, u}}, u, c1);
    m.add(CochainKey{{o1, o2, o2}, {u, e2}}, u, c1);
    return StructuredCategory(qp, StructureKind::Linear, MixedCochain(m));
}

StructuredCategory ternary_example(const FieldSpec& f) {
    auto q = std::make_shared<GradedQuiver>(f, 0, 2);
    ObjId e = q->add_object("e");
    ArrowId x = q->add_arrow("x", e, e, 1);
    ArrowId y = q->add_arrow("y", e, e, 2);
    QuiverPtr qp = q;

    Cochain m3(qp, Level::Base, 3, -1);
    m3.add(CochainKey{{e, e, e, e}, {x, x, x}}, y, Scalar::one(f));
    return StructuredCategory(qp, StructureKind::AInfinity, MixedCochain(m3));
}

Cochain phi_one(const StructuredCategory& dual) {
    const QuiverPtr& q = dual.quiver;
    ObjId e = *q->find_object("e");
    ArrowId unit = need_arrow(*q, e, e, "one");
    ArrowId x = need_arrow(*q, e, e, "x");
    Cochain phi(q, Level::Base, 2, 0);
    phi.add(CochainKey{{e, e, e}, {x, x}}, unit, Scalar::one(q->field()));
    return phi;
}

Cochain psi_one(const StructuredCategory& dual) {
    const QuiverPtr& q = dual.quiver;
    ObjId e = *q->find_object("e");
    ArrowId unit = need_arrow(*q, e, e, "one");
    ArrowId x = need_arrow(*q, e, e, "x");
    Cochain psi(q, Level::Base, 1, 0);
    psi.add(CochainKey{{e, e}, {x}}, unit, Scalar::one(q->field()));
    return psi;
}

ComplexWindow x_complex(const StructuredCategory& dual, int len, const std::string& name) {
    if (len < 1) throw std::invalid_argument("window length must be positive");
    const QuiverPtr& q = dual.quiver;
    ObjId e = *q->find_object("e");
    ArrowId x = need_arrow(*q, e, e, "x");
    ComplexWindow w;
    w.name = name;
    w.lo = 0;
    w.hi = len - 1;
    for (int p = 0; p < len; ++p) w.at[p] = e;
    for (int p = 0; p + 1 < len; ++p) w.delta[{p, p + 1}] = LinComb{{x, Scalar::one(q->field())}};
    return w;
}

ComplexWindow identity_precomplex(const StructuredCategory& dual) {
    const QuiverPtr& q = dual.quiver;
    ObjId e = *q->find_object("e");
    ArrowId unit = need_arrow(*q, e, e, "one");
    ComplexWindow w;
    w.name = "ones3";
    w.lo = 0;
    w.hi = 2;
    for (int p = 0; p <= 2; ++p) w.at[p] = e;
    w.delta[{0, 1}] = LinComb{{unit, Scalar::one(q->field())}};
    w.delta[{1, 2}] = LinComb{{unit, Scalar::one(q->field())}};
    return w;
}

ComplexWindow a2_u_complex(const StructuredCategory& path_cat) {
    const QuiverPtr& q = path_cat.quiver;
    ObjId o1 = *q->find_object("1");
    ObjId o2 = *q->find_object("2");
    ArrowId u = need_arrow(*q, o1, o2, "u");
    ComplexWindow w;
    w.name = "u2";
    w.lo = 0;
    w.hi = 1;
    w.at[0] = o1;
    w.at[1] = o2;
    w.delta[{0, 1}] = LinComb{{u, Scalar::one(q->field())}};
    return w;
}

ComplexWindow a2_three_term(const StructuredCategory& path_cat) {
    const QuiverPtr& q = path_cat.quiver;
    ObjId o1 = *q->find_object("1");
    ObjId o2 = *q->find_object("2");
    ArrowId u = need_arrow(*q, o1, o2, "u");
    ComplexWindow w;
    w.name = "u3";
    w.lo = 0;
    w.hi = 2;
    w.at[0] = o1;
    w.at[1] = o2;
    w.at[2] = o2;
    w.delta[{0, 1}] = LinComb{{u, Scalar::one(q->field())}};
    // the step 1 → 2 is zero
    return w;
}

Corpus make_corpus(const FieldSpec& f) {
    StructuredCategory dual = dual_numbers_category(f);
    StructuredCategory path = a2_path_category(f);
    Cochain phi = phi_one(dual);
    Cochain psi = psi_one(dual);
    std::vector<ComplexWindow> xw;
    for (int len = 1; len <= 4; ++len)
        xw.push_back(x_complex(dual, len, "x" + std::to_string(len)));
    ComplexWindow pre = identity_precomplex(dual);
    std::vector<ComplexWindow> pw{a2_u_complex(path), a2_three_term(path)};
    return Corpus{std::move(dual),  std::move(path), std::move(phi), std::move(psi),
                  std::move(xw),    std::move(pre),  std::move(pw)};
}

}  // namespace embrace
