#include "embrace/deformation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace embrace {

namespace {

std::vector<ArrowId> hom_degree_basis(const GradedQuiver& q, ObjId c, ObjId d, int n) {
    std::vector<ArrowId> out;
    for (ArrowId a : q.hom(c, d))
        if (q.arrow(a).degree == n) out.push_back(a);
    return out;
}

// Matrix of the arity-1 structure action from degree n to degree n+1 inside
// hom(c, d).
SparseMatrix hom_diff_matrix(const StructuredCategory& cat, ObjId c, ObjId d, int n,
                             const std::vector<ArrowId>& dom, const std::vector<ArrowId>& cod) {
    const FieldSpec& field = cat.quiver->field();
    const Cochain* d1 = cat.mu.part(1);
    std::map<ArrowId, int> cod_index;
    for (int i = 0; i < static_cast<int>(cod.size()); ++i) cod_index[cod[i]] = i;
    std::vector<SparseMatrix::Entry> entries;
    if (d1) {
        Scalar one = Scalar::one(field);
        for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
            LinComb v = eval_arity1(*d1, LinComb{{dom[j], one}});
            for (const auto& [w, cw] : v) entries.push_back({cod_index.at(w), j, cw});
        }
    }
    return SparseMatrix::from_triplets(field, static_cast<int>(cod.size()),
                                       static_cast<int>(dom.size()), std::move(entries));
}

void require_square_zero(const StructuredCategory& cat, ObjId c, ObjId d, int n) {
    const Cochain* d1 = cat.mu.part(1);
    if (!d1) return;
    Scalar one = Scalar::one(cat.quiver->field());
    for (ArrowId a : hom_degree_basis(*cat.quiver, c, d, n)) {
        LinComb dd = eval_arity1(*d1, eval_arity1(*d1, LinComb{{a, one}}));
        if (!lincomb_is_zero(dd))
            throw std::invalid_argument(
                "hom-complex differential does not square to zero between '" +
                cat.quiver->object_name(c) + "' and '" + cat.quiver->object_name(d) + "'");
    }
}

Vec hom_coordinates(const std::vector<ArrowId>& basis, const LinComb& v, const FieldSpec& field) {
    std::map<ArrowId, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[i]] = i;
    Vec out(basis.size(), Scalar::zero(field));
    for (const auto& [a, c] : v) {
        auto it = index.find(a);
        if (it == index.end())
            throw std::invalid_argument("hom value outside the expected graded component");
        out[static_cast<size_t>(it->second)] = c;
    }
    return out;
}

LinComb hom_from_coordinates(const std::vector<ArrowId>& basis, const Vec& v) {
    LinComb out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) out[basis[i]] = v[i];
    return out;
}

// Uniform degree of a hom value inside hom(c, d); nullopt for the empty value.
std::optional<int> uniform_degree(const GradedQuiver& q, ObjId c, ObjId d, const LinComb& v) {
    std::optional<int> deg;
    for (const auto& [a, coeff] : v) {
        const Arrow& arr = q.arrow(a);
        if (arr.src != c || arr.tgt != d)
            throw std::invalid_argument("hom value contains an arrow between other objects");
        if (deg && *deg != arr.degree)
            throw std::invalid_argument("hom value mixes degrees");
        deg = arr.degree;
    }
    return deg;
}

}  // namespace

HomCohomology hom_cohomology(const StructuredCategory& cat, ObjId c, ObjId d, int n) {
    const GradedQuiver& q = *cat.quiver;
    const FieldSpec& field = q.field();
    require_square_zero(cat, c, d, n);
    require_square_zero(cat, c, d, n - 1);

    auto dom = hom_degree_basis(q, c, d, n);
    auto cod = hom_degree_basis(q, c, d, n + 1);
    auto below = hom_degree_basis(q, c, d, n - 1);
    SparseMatrix d_n = hom_diff_matrix(cat, c, d, n, dom, cod);
    SparseMatrix d_prev = hom_diff_matrix(cat, c, d, n - 1, below, dom);

    HomCohomology out;
    std::vector<Vec> cocycles = kernel_basis(d_n);
    out.cocycle_dim = static_cast<int>(cocycles.size());

    std::vector<Vec> image;
    for (int j = 0; j < static_cast<int>(below.size()); ++j) {
        Vec unit(below.size(), Scalar::zero(field));
        unit[static_cast<size_t>(j)] = Scalar::one(field);
        Vec col = d_prev.apply(unit);
        bool nonzero = false;
        for (const Scalar& s : col)
            if (!s.is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) image.push_back(std::move(col));
    }
    out.coboundary_dim = rank(SparseMatrix::from_dense_rows(field, image,
                                                            static_cast<int>(dom.size())));
    out.dimension = quotient_dim(field, cocycles, image, static_cast<int>(dom.size()));

    std::vector<Vec> stacked = image;
    int current = out.coboundary_dim;
    for (const Vec& v : cocycles) {
        stacked.push_back(v);
        int r = rank(SparseMatrix::from_dense_rows(field, stacked, static_cast<int>(dom.size())));
        if (r > current) {
            current = r;
            out.representatives.push_back(hom_from_coordinates(dom, v));
        } else {
            stacked.pop_back();
        }
    }
    return out;
}

std::optional<LinComb> hom_coboundary_witness(const StructuredCategory& cat, ObjId c, ObjId d,
                                              const LinComb& v) {
    if (lincomb_is_zero(v)) return LinComb{};
    const GradedQuiver& q = *cat.quiver;
    int deg = *uniform_degree(q, c, d, v);
    auto dom = hom_degree_basis(q, c, d, deg - 1);
    auto cod = hom_degree_basis(q, c, d, deg);
    require_square_zero(cat, c, d, deg - 1);
    SparseMatrix m = hom_diff_matrix(cat, c, d, deg - 1, dom, cod);
    auto sol = solve(m, hom_coordinates(cod, v, q.field()));
    if (!sol) return std::nullopt;
    return hom_from_coordinates(dom, *sol);
}

bool hom_classes_equal(const StructuredCategory& cat, ObjId c, ObjId d, const LinComb& u,
                       const LinComb& v) {
    LinComb diff = u;
    lincomb_add(diff, v, -Scalar::one(cat.quiver->field()));
    return hom_coboundary_witness(cat, c, d, diff).has_value();
}

FirstOrderDeformation make_deformation(const StructuredCategory& base,
                                       const MixedCochain& cocycle) {
    if (cocycle.quiver().get() != base.quiver.get())
        throw std::invalid_argument("cocycle lives on a different quiver than the base");
    if (cocycle.level() != Level::Base)
        throw std::invalid_argument("deformation cocycle must be base-level");
    if (cocycle.hochschild_degree() != 2)
        throw std::invalid_argument("deformation cocycle must have Hochschild degree 2");
    MixedCochain d = hochschild_differential(base.b, cocycle);
    for (const auto& [arity, part] : d.parts())
        if (!part.is_zero())
            throw std::invalid_argument("not a cocycle: the differential has a nonzero arity-" +
                                        std::to_string(arity) + " component");
    return FirstOrderDeformation{base, cocycle};
}

FirstOrderDeformation make_deformation(const StructuredCategory& base, const Cochain& cocycle) {
    return make_deformation(base, MixedCochain(cocycle));
}

DeformedCategory deform_category(const FirstOrderDeformation& def) {
    const MixedCochain& b = def.base.b;
    MixedCochain phi_hat = suspend(def.cocycle);
    MixedCochain order0 = brace(b, std::vector<MixedCochain>{b});
    if (!order0.is_zero())
        throw std::logic_error("base structure fails its own structure equation");
    MixedCochain order1 =
        brace(b, std::vector<MixedCochain>{phi_hat}) + brace(phi_hat, std::vector<MixedCochain>{b});
    if (!order1.is_zero())
        throw std::logic_error("deformed structure fails the structure equation at first order");
    return DeformedCategory{def, def.base.mu, def.cocycle};
}

GaugeOutcome gauge_apply(const FirstOrderDeformation& from, const FirstOrderDeformation& to,
                         const MixedCochain& h) {
    if (from.base.quiver.get() != to.base.quiver.get() || !(from.base.mu == to.base.mu))
        throw std::invalid_argument("gauge between deformations of different bases");
    if (h.quiver().get() != from.base.quiver.get())
        throw std::invalid_argument("gauge element lives on a different quiver");
    if (h.level() != Level::Base || h.hochschild_degree() != 1)
        throw std::invalid_argument("gauge element must be base-level of Hochschild degree 1");
    MixedCochain dh = hochschild_differential(from.base.b, h);
    MixedCochain residual = dh - (to.cocycle - from.cocycle);
    return GaugeOutcome{residual.is_zero(), residual};
}

std::optional<MixedCochain> find_gauge(const FirstOrderDeformation& from,
                                       const FirstOrderDeformation& to, int arity_max) {
    if (from.base.quiver.get() != to.base.quiver.get() || !(from.base.mu == to.base.mu))
        throw std::invalid_argument("gauge between deformations of different bases");
    return coboundary_witness(from.base.b, to.cocycle - from.cocycle, arity_max);
}

namespace {

void require_window_setup(const WindowCategory& wc, const FirstOrderDeformation& def,
                          ObjId window_obj) {
    const TwCollection& tw = wc.collection;
    if (def.base.quiver.get() != tw.base().get())
        throw std::invalid_argument("deformation does not live on the window base");
    if (window_obj < 0 || window_obj >= static_cast<ObjId>(tw.objects().size()))
        throw std::invalid_argument("unknown window object");
    for (ArrowId a = 0; a < tw.base()->arrow_count(); ++a)
        if (tw.base()->arrow(a).degree != 0)
            throw std::invalid_argument(
                "characteristic values require a base concentrated in degree 0");
    const Cochain* curv = wc.category.mu.part(0);
    if (curv && !curvature_at(*curv, window_obj).empty())
        throw std::invalid_argument("window object '" +
                                    tw.quiver()->object_name(window_obj) +
                                    "' is not a complex");
}

// Direct matrix contraction of the cocycle with the twist: over a degree-0
// base every twist entry drops the shift by exactly one, so the arity-m
// component contributes with sign (−1)^{m(m−1)/2} along summand chains.
LinComb direct_contraction(const WindowCategory& wc, const MixedCochain& phi, ObjId obj) {
    const TwCollection& tw = wc.collection;
    const TwistedObject& t = tw.objects()[static_cast<size_t>(obj)];
    int summand_count = static_cast<int>(t.carrier.summands.size());
    LinComb out;
    for (const auto& [arity, part] : phi.parts()) {
        if (part.is_zero()) continue;
        long long m = arity;
        SignExponent sign = SignExponent::of(m * (m - 1) / 2);
        if (arity == 0) {
            for (int p = 0; p < summand_count; ++p) {
                LinComb v = part.value(CochainKey{{t.carrier.summands[p].object}, {}});
                for (const auto& [w, c] : v) {
                    auto slot = tw.find_slot(obj, obj, p, p, w);
                    if (!slot) throw std::logic_error("missing diagonal slot");
                    lincomb_add(out, *slot, sign.apply(c));
                }
            }
            continue;
        }
        std::vector<int> chain;
        std::function<void(int)> walk = [&](int at) {
            if (static_cast<int>(chain.size()) == arity + 1) {
                std::vector<ObjId> path;
                std::vector<LinComb> args;
                for (int pos : chain) path.push_back(t.carrier.summands[pos].object);
                for (size_t l = 0; l + 1 < chain.size(); ++l)
                    args.push_back(t.delta.entries.at({chain[l], chain[l + 1]}));
                LinComb v = evaluate_multilinear(part, path, args);
                for (const auto& [w, c] : v) {
                    auto slot = tw.find_slot(obj, obj, chain.front(), chain.back(), w);
                    if (!slot) throw std::logic_error("missing contraction slot");
                    lincomb_add(out, *slot, sign.apply(c));
                }
                return;
            }
            for (const auto& [cell_key, cell] : t.delta.entries) {
                if (cell_key.first != at || lincomb_is_zero(cell)) continue;
                chain.push_back(cell_key.second);
                walk(cell_key.second);
                chain.pop_back();
            }
        };
        for (int p = 0; p < summand_count; ++p) {
            chain.assign(1, p);
            walk(p);
        }
    }
    return out;
}

}  // namespace

HomotopyClassReport characteristic_value(const WindowCategory& wc,
                                         const FirstOrderDeformation& def, ObjId window_obj) {
    require_window_setup(wc, def, window_obj);
    const TwCollection& tw = wc.collection;
    HomotopyClassReport rep;
    rep.object = window_obj;
    MixedCochain transported = embr_delta(tw, def.cocycle);
    rep.representative = transported.part_or_zero(0).value(CochainKey{{window_obj}, {}});
    rep.direct = direct_contraction(wc, def.cocycle, window_obj);
    rep.routes_agree = (rep.representative == rep.direct);
    rep.bounding =
        hom_coboundary_witness(wc.category, window_obj, window_obj, rep.representative);
    rep.vanishes = rep.bounding.has_value();
    return rep;
}

ObstructionReport obstruction_and_lift(const WindowCategory& wc, const FirstOrderDeformation& def,
                                       ObjId window_obj) {
    HomotopyClassReport cls = characteristic_value(wc, def, window_obj);
    const TwCollection& tw = wc.collection;
    const GradedQuiver& q = *tw.quiver();
    const FieldSpec& field = q.field();
    const Cochain* m2 = def.base.composition();
    if (!m2) throw std::invalid_argument("base without a composition");

    ObstructionReport rep;
    rep.object = window_obj;
    rep.representative = cls.direct;
    rep.vanishes = cls.vanishes;

    const FreeMorphism& delta = tw.objects()[static_cast<size_t>(window_obj)].delta;
    auto dom = hom_degree_basis(q, window_obj, window_obj, 1);
    auto cod = hom_degree_basis(q, window_obj, window_obj, 2);
    std::map<ArrowId, int> cod_index;
    for (int i = 0; i < static_cast<int>(cod.size()); ++i) cod_index[cod[i]] = i;
    Scalar one = Scalar::one(field);
    std::vector<SparseMatrix::Entry> entries;
    for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
        const TwCollection::Slot& s = tw.slot(dom[static_cast<size_t>(j)]);
        FreeMorphism f;
        f.add(s.src_summand, s.tgt_summand, s.base_arrow, one);
        FreeMorphism total = compose_free(*m2, f, delta);  // δ after f
        FreeMorphism fd = compose_free(*m2, delta, f);     // f after δ
        for (const auto& [cell_key, cell] : fd.entries)
            for (const auto& [g, c] : cell) total.add(cell_key.first, cell_key.second, g, c);
        if (total.is_zero()) continue;
        LinComb lv = tw.to_lincomb(window_obj, window_obj, total);
        for (const auto& [w, cw] : lv)
            entries.push_back({cod_index.at(w), j, cw});
    }
    SparseMatrix system = SparseMatrix::from_triplets(field, static_cast<int>(cod.size()),
                                                      static_cast<int>(dom.size()), entries);
    Vec rhs = hom_coordinates(cod, rep.representative, field);

    std::vector<SparseMatrix::Entry> augmented = entries;
    for (int r = 0; r < static_cast<int>(rhs.size()); ++r)
        if (!rhs[static_cast<size_t>(r)].is_zero())
            augmented.push_back({r, static_cast<int>(dom.size()), rhs[static_cast<size_t>(r)]});
    rep.system_rank = rank(system);
    rep.augmented_rank = rank(SparseMatrix::from_triplets(
        field, static_cast<int>(cod.size()), static_cast<int>(dom.size()) + 1,
        std::move(augmented)));

    auto sol = solve(system, rhs);
    if (sol) rep.witness = tw.to_matrix(hom_from_coordinates(dom, *sol));
    rep.theorem_holds = cls.routes_agree && (rep.vanishes == sol.has_value());
    if (rep.vanishes) rep.lift_space_dim = hom_cohomology(wc.category, window_obj, window_obj, 1).dimension;
    return rep;
}

CentralityReport verify_centrality(const WindowCategory& wc, const FirstOrderDeformation& def,
                                   const std::vector<ChainMap>& maps) {
    const GradedQuiver& q = *wc.collection.quiver();
    const Cochain* mu1 = wc.category.mu.part(1);
    const Cochain* mu2 = wc.category.mu.part(2);
    if (!mu2) throw std::invalid_argument("window structure without a composition");
    Scalar minus_one = -Scalar::one(q.field());

    CentralityReport report;
    for (const ChainMap& cm : maps) {
        uniform_degree(q, cm.src, cm.tgt, cm.value);  // endpoint/degree validation
        LinComb df = mu1 ? eval_arity1(*mu1, cm.value) : LinComb{};
        if (!lincomb_is_zero(df))
            throw std::invalid_argument("input from '" + q.object_name(cm.src) + "' to '" +
                                        q.object_name(cm.tgt) + "' is not a chain map");
        LinComb chi_src = characteristic_value(wc, def, cm.src).representative;
        LinComb chi_tgt = characteristic_value(wc, def, cm.tgt).representative;
        CentralityPair pair;
        pair.src = cm.src;
        pair.tgt = cm.tgt;
        // degree 2 is even: the naturality square has no Koszul sign
        pair.residual = eval_arity2(*mu2, cm.value, chi_tgt);
        lincomb_add(pair.residual, eval_arity2(*mu2, chi_src, cm.value), minus_one);
        pair.homotopy = hom_coboundary_witness(wc.category, cm.src, cm.tgt, pair.residual);
        pair.pass = pair.homotopy.has_value();
        if (!pair.pass) report.pass = false;
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

namespace {

// First-order pair (constant part, ε part) of a mixed cochain.
struct EpsMixed {
    MixedCochain c0;
    MixedCochain c1;
};

EpsMixed brace_eps(const EpsMixed& x, const std::vector<EpsMixed>& ys) {
    std::vector<MixedCochain> y0;
    y0.reserve(ys.size());
    for (const auto& y : ys) y0.push_back(y.c0);
    MixedCochain c0 = brace(x.c0, y0);
    MixedCochain c1 = brace(x.c1, y0);
    for (size_t i = 0; i < ys.size(); ++i) {
        std::vector<MixedCochain> with_eps = y0;
        with_eps[i] = ys[i].c1;
        c1 = c1 + brace(x.c0, with_eps);
    }
    return EpsMixed{std::move(c0), std::move(c1)};
}

}  // namespace

PrecomplexReport verify_precomplexes(const WindowCategory& wc, const FirstOrderDeformation& def,
                                     const Cochain& gamma) {
    const TwCollection& tw = wc.collection;
    if (def.base.quiver.get() != tw.base().get())
        throw std::invalid_argument("deformation does not live on the window base");
    if (gamma.quiver().get() != tw.quiver().get())
        throw std::invalid_argument("lift family must live on the window quiver");
    if (gamma.level() != Level::Base || gamma.arity() != 0 || gamma.internal_degree() != 1)
        throw std::invalid_argument(
            "lift family must be an arity-0 base-level cochain of internal degree 1");

    // Trivial-lift route.
    MixedCochain mu_bar_eps = embr_delta(tw, def.cocycle);

    // Lifted route: the section over twists δ + Γε of the base μ + φε,
    // expanded to first order.
    EpsMixed hat{suspend(embed_cochain(tw, def.base.mu)),
                 suspend(embed_cochain(tw, def.cocycle))};
    EpsMixed delta_hat{MixedCochain(tw.delta_susp()), MixedCochain(suspend(gamma))};
    EpsMixed acc = hat;
    int arity_cap = std::max(def.base.mu.max_arity(), def.cocycle.max_arity());
    for (int k = 1; k <= std::max(arity_cap, 0); ++k) {
        std::vector<EpsMixed> ys(static_cast<size_t>(k), delta_hat);
        EpsMixed term = brace_eps(hat, ys);
        acc = EpsMixed{acc.c0 + term.c0, acc.c1 + term.c1};
    }
    MixedCochain tilde_constant = unsuspend(acc.c0);
    MixedCochain tilde_eps = unsuspend(acc.c1);

    MixedCochain correction = hochschild_differential(wc.category.b, MixedCochain(gamma));

    bool constant_ok = (tilde_constant == wc.category.mu);
    bool identity = (tilde_eps == mu_bar_eps + correction);
    return PrecomplexReport{identity, constant_ok, std::move(tilde_eps), std::move(mu_bar_eps),
                            std::move(correction)};
}

LocusReport phi_infinity_locus(const WindowCategory& wc, const FirstOrderDeformation& def,
                               const std::vector<ObjId>& candidates) {
    LocusReport report;
    report.consistent = true;
    for (ObjId c : candidates) {
        ObstructionReport rep = obstruction_and_lift(wc, def, c);
        if (!rep.theorem_holds) report.consistent = false;
        if (rep.vanishes)
            report.deformable.push_back(c);
        else
            report.obstructed.push_back(c);
    }
    return report;
}

NormalizeReport normalize_zero_part(const StructuredCategory& cat, const MixedCochain& phi_prime) {
    if (phi_prime.quiver().get() != cat.quiver.get())
        throw std::invalid_argument("cochain lives on a different quiver");
    if (phi_prime.level() != Level::Base || phi_prime.hochschild_degree() != 2)
        throw std::invalid_argument("normalization expects a base-level degree-2 cochain");
    const QuiverPtr& q = cat.quiver;
    const FieldSpec& field = q->field();
    CochainBasis dom(q, 0, 1);
    CochainBasis cod(q, 0, 2);

    std::vector<SparseMatrix::Entry> entries;
    for (int j = 0; j < dom.dimension(); ++j) {
        Vec unit(static_cast<size_t>(dom.dimension()), Scalar::zero(field));
        unit[static_cast<size_t>(j)] = Scalar::one(field);
        MixedCochain dh = hochschild_differential(cat.b, dom.from_coordinates(unit));
        Vec col = cod.coordinates(dh.part_or_zero(0));
        for (int r = 0; r < cod.dimension(); ++r)
            if (!col[static_cast<size_t>(r)].is_zero())
                entries.push_back({r, j, col[static_cast<size_t>(r)]});
    }
    SparseMatrix system = SparseMatrix::from_triplets(field, cod.dimension(), dom.dimension(),
                                                      std::move(entries));
    Vec rhs = cod.coordinates(phi_prime.part_or_zero(0));
    auto sol = solve(system, rhs);
    if (!sol)
        return NormalizeReport{false, Cochain(q, Level::Base, 0, 1), phi_prime};
    Cochain h = dom.from_coordinates(*sol);
    MixedCochain corrected = phi_prime - hochschild_differential(cat.b, h);
    bool success = corrected.part_or_zero(0).is_zero();
    return NormalizeReport{success, std::move(h), std::move(corrected)};
}

CohomologyResult hochschild_cohomology(const StructuredCategory& cat, int degree, int arity_max) {
    return hochschild_cohomology(cat.b, degree, arity_max);
}

}  // namespace embrace
