#include "embrace/structure.hpp"

#include <sstream>

namespace embrace {

std::string kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Linear: return "linear";
        case StructureKind::Dg: return "dg";
        case StructureKind::Cdg: return "cdg";
        case StructureKind::AInfinity: return "a-infinity";
        case StructureKind::AZeroInfinity: return "a-zero-infinity";
    }
    return "?";
}

std::optional<StructureKind> parse_kind(const std::string& name) {
    if (name == "linear") return StructureKind::Linear;
    if (name == "dg") return StructureKind::Dg;
    if (name == "cdg") return StructureKind::Cdg;
    if (name == "a-infinity") return StructureKind::AInfinity;
    if (name == "a-zero-infinity") return StructureKind::AZeroInfinity;
    return std::nullopt;
}

namespace {

bool arity_allowed(StructureKind k, int arity) {
    switch (k) {
        case StructureKind::Linear: return arity == 2;
        case StructureKind::Dg: return arity == 1 || arity == 2;
        case StructureKind::Cdg: return arity <= 2;
        case StructureKind::AInfinity: return arity >= 1;
        case StructureKind::AZeroInfinity: return true;
    }
    return false;
}

}  // namespace

StructuredCategory::StructuredCategory(QuiverPtr q, StructureKind k, MixedCochain mu_in)
    : quiver(std::move(q)), kind(k), mu(std::move(mu_in)), b(suspend(mu)) {
    if (mu.quiver() != quiver) throw std::invalid_argument("structure cochain lives on a different quiver");
    if (mu.level() != Level::Base || mu.degree() != 2)
        throw std::invalid_argument("structure cochain must have Hochschild degree 2 at base level");
    for (auto& [arity, part] : mu.parts())
        if (!part.is_zero() && !arity_allowed(kind, arity))
            throw std::invalid_argument("structure of kind '" + kind_name(kind) +
                                        "' must not have an arity-" + std::to_string(arity) +
                                        " component");
}

LinComb eval_arity1(const Cochain& f, const LinComb& arg) {
    if (f.arity() != 1) throw std::logic_error("eval_arity1 expects an arity-1 cochain");
    const GradedQuiver& q = *f.quiver();
    LinComb out;
    for (auto& [a, c] : arg) {
        const Arrow& ar = q.arrow(a);
        CochainKey key;
        key.path = {ar.src, ar.tgt};
        key.args = {a};
        lincomb_add(out, f.value(key), c);
    }
    return out;
}

LinComb eval_arity2(const Cochain& m, const LinComb& low, const LinComb& high) {
    if (m.arity() != 2) throw std::logic_error("eval_arity2 expects an arity-2 cochain");
    const GradedQuiver& q = *m.quiver();
    LinComb out;
    for (auto& [a, ca] : low) {
        const Arrow& first = q.arrow(a);
        for (auto& [b, cb] : high) {
            const Arrow& second = q.arrow(b);
            if (first.tgt != second.src) throw std::logic_error("eval_arity2: arguments not composable");
            CochainKey key;
            key.path = {first.src, first.tgt, second.tgt};
            key.args = {a, b};
            lincomb_add(out, m.value(key), ca * cb);
        }
    }
    return out;
}

LinComb curvature_at(const Cochain& c, ObjId obj) {
    if (c.arity() != 0) throw std::logic_error("curvature_at expects an arity-0 cochain");
    CochainKey key;
    key.path = {obj};
    return c.value(key);
}

StructureReport check_structure(const StructuredCategory& cat) {
    StructureReport rep;
    const GradedQuiver& q = *cat.quiver;

    MixedCochain bb = brace(cat.b, {cat.b});
    if (!bb.is_zero()) {
        for (auto& [arity, part] : bb.parts())
            if (!part.is_zero()) {
                rep.fail("structure relation b{b} = 0 fails in arity " + std::to_string(arity) +
                         ": " + part.str());
                break;
            }
    }

    if (cat.mu.max_arity() > 2) return rep;  // direct identities apply to the cdg shape only

    Cochain c = cat.mu.part_or_zero(0);
    Cochain d = cat.mu.part_or_zero(1);
    Cochain m = cat.mu.part_or_zero(2);
    const FieldSpec& field = q.field();

    auto single = [&](ArrowId a) {
        LinComb l;
        l.emplace(a, Scalar::one(field));
        return l;
    };

    // curvature is killed by the differential
    for (ObjId A = 0; A < q.object_count(); ++A) {
        LinComb r = eval_arity1(d, curvature_at(c, A));
        if (!lincomb_is_zero(r))
            rep.fail("differential of the curvature nonzero at object '" + q.object_name(A) +
                     "': " + lincomb_str(q, r));
    }

    // squared differential equals the negated curvature commutator
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        LinComb r = eval_arity1(d, eval_arity1(d, single(a)));
        lincomb_add(r, eval_arity2(m, single(a), curvature_at(c, ar.tgt)), Scalar::one(field));
        lincomb_add(r, eval_arity2(m, curvature_at(c, ar.src), single(a)), -Scalar::one(field));
        if (!lincomb_is_zero(r))
            rep.fail("squared differential does not match the curvature commutator on arrow '" +
                     ar.name + "': " + lincomb_str(q, r));
    }

    // Leibniz rule on composable pairs
    for (ArrowId g = 0; g < q.arrow_count(); ++g) {
        for (ArrowId f = 0; f < q.arrow_count(); ++f) {
            if (q.arrow(g).tgt != q.arrow(f).src) continue;
            LinComb r = eval_arity1(d, eval_arity2(m, single(g), single(f)));
            lincomb_add(r, eval_arity2(m, single(g), eval_arity1(d, single(f))),
                        -Scalar::one(field));
            Scalar sgn = SignExponent::of(q.arrow(f).degree).scalar(field);
            lincomb_add(r, eval_arity2(m, eval_arity1(d, single(g)), single(f)), -sgn);
            if (!lincomb_is_zero(r))
                rep.fail("Leibniz rule fails on ('" + q.arrow(g).name + "', '" + q.arrow(f).name +
                         "'): " + lincomb_str(q, r));
        }
    }

    // associativity on composable triples
    for (ArrowId h = 0; h < q.arrow_count(); ++h) {
        for (ArrowId g = 0; g < q.arrow_count(); ++g) {
            if (q.arrow(h).tgt != q.arrow(g).src) continue;
            for (ArrowId f = 0; f < q.arrow_count(); ++f) {
                if (q.arrow(g).tgt != q.arrow(f).src) continue;
                LinComb lhs = eval_arity2(m, eval_arity2(m, single(h), single(g)), single(f));
                LinComb rhs = eval_arity2(m, single(h), eval_arity2(m, single(g), single(f)));
                lincomb_add(lhs, rhs, -Scalar::one(field));
                if (!lincomb_is_zero(lhs))
                    rep.fail("associativity fails on ('" + q.arrow(h).name + "', '" +
                             q.arrow(g).name + "', '" + q.arrow(f).name + "'): " +
                             lincomb_str(q, lhs));
            }
        }
    }
    return rep;
}

Cochain restrict_cochain(QuiverPtr sub, const Cochain& c) {
    const GradedQuiver& parent = *c.quiver();
    const GradedQuiver& s = *sub;
    Cochain out(sub, c.level(), c.arity(), c.degree());
    for (auto& [key, value] : c.table()) {
        CochainKey mapped;
        bool keep = true;
        for (ObjId o : key.path) {
            auto so = s.find_object(parent.object_name(o));
            if (!so) {
                keep = false;
                break;
            }
            mapped.path.push_back(*so);
        }
        if (!keep) continue;
        for (size_t l = 0; l < key.args.size() && keep; ++l) {
            const Arrow& ar = parent.arrow(key.args[l]);
            auto sa = s.find_arrow(mapped.path[l], mapped.path[l + 1], ar.name);
            if (!sa) throw std::logic_error("restriction target misses arrow '" + ar.name + "'");
            mapped.args.push_back(*sa);
        }
        for (auto& [va, coeff] : value) {
            const Arrow& ar = parent.arrow(va);
            auto sa = s.find_arrow(mapped.path.front(), mapped.path.back(), ar.name);
            if (!sa) throw std::logic_error("restriction target misses arrow '" + ar.name + "'");
            out.add(mapped, *sa, coeff);
        }
    }
    return out;
}

MixedCochain restrict_cochain(QuiverPtr sub, const MixedCochain& c) {
    MixedCochain out(sub, c.level(), c.degree());
    for (auto& [arity, part] : c.parts()) {
        Cochain r = restrict_cochain(sub, part);
        if (!r.is_zero()) out.add_part(r);
    }
    return out;
}

StructuredCategory restrict_structure(const StructuredCategory& cat,
                                      const std::vector<ObjId>& objects) {
    const GradedQuiver& parent = *cat.quiver;
    auto window = parent.degree_window();
    auto sub = std::make_shared<GradedQuiver>(parent.field(), window.first, window.second);
    for (ObjId o : objects) {
        if (o < 0 || o >= parent.object_count())
            throw std::invalid_argument("unknown object identifier " + std::to_string(o));
        sub->add_object(parent.object_name(o));
    }
    for (ArrowId a = 0; a < parent.arrow_count(); ++a) {
        const Arrow& ar = parent.arrow(a);
        auto so = sub->find_object(parent.object_name(ar.src));
        auto to = sub->find_object(parent.object_name(ar.tgt));
        if (so && to) sub->add_arrow(ar.name, *so, *to, ar.degree);
    }
    QuiverPtr frozen = sub;
    return StructuredCategory(frozen, cat.kind, restrict_cochain(frozen, cat.mu));
}

StructuredCategory infinity_part(const StructuredCategory& cat) {
    Cochain c = cat.mu.part_or_zero(0);
    std::vector<ObjId> keep;
    for (ObjId A = 0; A < cat.quiver->object_count(); ++A)
        if (lincomb_is_zero(curvature_at(c, A))) keep.push_back(A);
    StructureKind kind = cat.kind;
    if (kind == StructureKind::Cdg) kind = StructureKind::Dg;
    if (kind == StructureKind::AZeroInfinity) kind = StructureKind::AInfinity;
    StructuredCategory out = restrict_structure(cat, keep);
    return StructuredCategory(out.quiver, kind, out.mu);
}

StructuredCategory transport(const std::function<MixedCochain(const MixedCochain&)>& psi,
                             QuiverPtr target_quiver, StructureKind kind,
                             const StructuredCategory& cat) {
    MixedCochain image = psi(cat.mu);
    if (image.quiver() != target_quiver)
        throw std::logic_error("transported structure lives on an unexpected quiver");
    StructuredCategory out(target_quiver, kind, image);
    StructureReport rep = check_structure(out);
    if (!rep.pass)
        throw std::logic_error("transported structure failed validation: " + rep.failures.front());
    return out;
}

BraceMorphismReport is_brace_morphism(const std::function<MixedCochain(const MixedCochain&)>& psi,
                                      QuiverPtr domain, int arity_max, int deg_lo, int deg_hi,
                                      std::uint64_t seed, int samples) {
    BraceMorphismReport rep;
    std::mt19937_64 rng(seed);

    // restrict sampling to (arity, internal degree) slots with nonzero bases
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a <= arity_max; ++a)
        for (int i = deg_lo; i <= deg_hi; ++i)
            if (CochainBasis(domain, a, i).dimension() > 0) slots.emplace_back(a, i);
    if (slots.empty()) {
        rep.samples = 0;
        return rep;
    }
    auto sample = [&]() {
        auto [a, i] = slots[rng() % slots.size()];
        return MixedCochain(suspend(random_cochain(domain, a, i, rng)));
    };

    for (int s = 0; s < samples; ++s) {
        MixedCochain x = sample();
        int k = 1 + static_cast<int>(rng() % 2);
        std::vector<MixedCochain> ys, pys;
        for (int t = 0; t < k; ++t) ys.push_back(sample());
        for (auto& y : ys) pys.push_back(psi(y));
        MixedCochain lhs = psi(brace(x, ys));
        MixedCochain rhs = brace(psi(x), pys);
        ++rep.samples;
        if (!(lhs == rhs)) {
            rep.pass = false;
            std::ostringstream w;
            w << "sample " << s << ": psi(x{y..}) != psi(x){psi(y)..} with x = " << x.str();
            rep.witness = w.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace embrace
