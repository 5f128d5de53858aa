#include "embrace/twisted.hpp"

#include "embrace/brace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace embrace {

void FreeMorphism::add(int src_summand, int tgt_summand, ArrowId base_arrow,
                       const Scalar& coeff) {
    auto key = std::make_pair(src_summand, tgt_summand);
    LinComb& cell = entries[key];
    lincomb_add(cell, base_arrow, coeff);
    if (cell.empty()) entries.erase(key);
}

bool FreeMorphism::is_zero() const {
    for (const auto& [cell_key, cell] : entries)
        if (!lincomb_is_zero(cell)) return false;
    return true;
}

std::set<int> phi_reach(const FreeMorphism& f, const std::set<int>& from) {
    std::set<int> out;
    for (const auto& [cell_key, cell] : f.entries)
        if (!lincomb_is_zero(cell) && from.count(cell_key.first) > 0) out.insert(cell_key.second);
    return out;
}

IlnReport is_iln(const FreeMorphism& f, int index_count) {
    IlnReport report;
    std::set<int> current;
    for (int i = 0; i < index_count; ++i) current.insert(i);
    int steps = 0;
    while (!current.empty()) {
        std::set<int> next = phi_reach(f, current);
        ++steps;
        if (next == current) {
            report.iln = false;
            report.nilpotence = 0;
            return report;
        }
        current = std::move(next);
        if (steps > index_count + 1) break;  // unreachable for monotone iteration
    }
    report.iln = current.empty();
    report.nilpotence = report.iln ? steps : 0;
    // A full initial set makes the iteration decreasing, so an empty set is
    // reached exactly when the support digraph is acyclic.
    if (index_count == 0) {
        report.iln = true;
        report.nilpotence = 0;
    }
    return report;
}

TwistedObject window_object(const GradedQuiver& base, const ComplexWindow& w) {
    if (w.lo > w.hi) throw std::invalid_argument("window '" + w.name + "' has lo > hi");
    TwistedObject out;
    out.carrier.name = w.name;
    std::map<int, int> summand_at;
    for (const auto& [pos, obj] : w.at) {
        if (pos < w.lo || pos > w.hi)
            throw std::invalid_argument("window '" + w.name + "' places an object outside [lo, hi]");
        if (obj < 0 || obj >= base.object_count())
            throw std::invalid_argument("window '" + w.name + "' references an unknown object");
    }
    for (int pos = w.lo; pos <= w.hi; ++pos) {
        auto it = w.at.find(pos);
        if (it == w.at.end()) continue;
        summand_at[pos] = static_cast<int>(out.carrier.summands.size());
        out.carrier.summands.push_back(Summand{-pos, it->second});
    }
    for (const auto& [pos_pair, cell] : w.delta) {
        if (lincomb_is_zero(cell)) continue;
        auto from = summand_at.find(pos_pair.first);
        auto to = summand_at.find(pos_pair.second);
        if (from == summand_at.end() || to == summand_at.end())
            throw std::invalid_argument("window '" + w.name +
                                        "' has a differential entry at an empty position");
        ObjId src_obj = w.at.at(pos_pair.first);
        ObjId tgt_obj = w.at.at(pos_pair.second);
        for (const auto& [a, c] : cell) {
            const Arrow& arr = base.arrow(a);
            if (arr.src != src_obj || arr.tgt != tgt_obj)
                throw std::invalid_argument("window '" + w.name + "' differential entry " +
                                            std::to_string(pos_pair.first) + "->" +
                                            std::to_string(pos_pair.second) +
                                            " uses an arrow outside the right hom space");
            out.delta.add(from->second, to->second, a, c);
        }
    }
    return out;
}

ComplexWindow shift_window(const GradedQuiver& base, const ComplexWindow& w, int k) {
    ComplexWindow out;
    out.name = w.name + "[" + std::to_string(k) + "]";
    out.lo = w.lo - k;
    out.hi = w.hi - k;
    for (const auto& [pos, obj] : w.at) out.at[pos - k] = obj;
    Scalar sign = SignExponent::of(k).scalar(base.field());
    for (const auto& [pos_pair, cell] : w.delta)
        out.delta[{pos_pair.first - k, pos_pair.second - k}] = lincomb_scale(cell, sign);
    return out;
}

TwistedObject base_copy(const GradedQuiver& base, ObjId obj, const std::string& name) {
    if (obj < 0 || obj >= base.object_count())
        throw std::invalid_argument("base copy of an unknown object");
    TwistedObject out;
    out.carrier.name = name;
    out.carrier.summands.push_back(Summand{0, obj});
    return out;
}

TwCollection::TwCollection(QuiverPtr base, std::vector<TwistedObject> objects)
    : base_(std::move(base)), objects_(std::move(objects)) {
    if (!base_) throw std::invalid_argument("null base quiver");
    if (objects_.empty()) throw std::invalid_argument("twisted collection needs at least one object");

    auto [base_lo, base_hi] = base_->degree_window();
    bool any = false;
    int shift_min = 0;
    int shift_max = 0;
    for (const auto& t : objects_) {
        if (t.carrier.summands.empty())
            throw std::invalid_argument("free object '" + t.carrier.name + "' has no summands");
        for (const auto& s : t.carrier.summands) {
            if (s.object < 0 || s.object >= base_->object_count())
                throw std::invalid_argument("free object '" + t.carrier.name +
                                            "' references an unknown base object");
            if (!any) {
                shift_min = shift_max = s.shift;
                any = true;
            }
            shift_min = std::min(shift_min, s.shift);
            shift_max = std::max(shift_max, s.shift);
        }
    }
    int span = any ? shift_max - shift_min : 0;

    auto q = std::make_shared<GradedQuiver>(base_->field(), base_lo - span, base_hi + span);
    std::vector<ObjId> ids;
    ids.reserve(objects_.size());
    for (const auto& t : objects_) ids.push_back(q->add_object(t.carrier.name));

    for (size_t src = 0; src < objects_.size(); ++src) {
        const FreeObject& S = objects_[src].carrier;
        for (size_t tgt = 0; tgt < objects_.size(); ++tgt) {
            const FreeObject& T = objects_[tgt].carrier;
            for (int p = 0; p < static_cast<int>(S.summands.size()); ++p) {
                for (int r = 0; r < static_cast<int>(T.summands.size()); ++r) {
                    for (ArrowId g : base_->hom(S.summands[p].object, T.summands[r].object)) {
                        const Arrow& ga = base_->arrow(g);
                        int deg = ga.degree - (T.summands[r].shift - S.summands[p].shift);
                        std::string name = "[" + std::to_string(p) + ">" + std::to_string(r) +
                                           "]" + ga.name;
                        ArrowId a = q->add_arrow(name, ids[src], ids[tgt], deg);
                        slots_[a] = Slot{p, r, g};
                    }
                }
            }
        }
    }
    quiver_ = q;

    Cochain d(quiver_, Level::Base, 0, 1);
    Scalar one = Scalar::one(base_->field());
    for (size_t i = 0; i < objects_.size(); ++i) {
        const TwistedObject& t = objects_[i];
        if (t.delta.is_zero()) continue;
        LinComb v;
        try {
            v = to_lincomb(ids[i], ids[i], t.delta);
        } catch (const std::exception& e) {
            throw std::invalid_argument("twist of '" + t.carrier.name + "': " + e.what());
        }
        try {
            d.add(CochainKey{{ids[i]}, {}}, v, one);
        } catch (const std::exception& e) {
            throw std::invalid_argument("twist of '" + t.carrier.name +
                                        "' is not a degree-1 endomorphism: " + e.what());
        }
    }
    delta_ = std::move(d);
}

std::optional<ArrowId> TwCollection::find_slot(ObjId tw_src, ObjId tw_tgt, int src_summand,
                                               int tgt_summand, ArrowId base_arrow) const {
    for (ArrowId a : quiver_->hom(tw_src, tw_tgt)) {
        const Slot& s = slots_.at(a);
        if (s.src_summand == src_summand && s.tgt_summand == tgt_summand &&
            s.base_arrow == base_arrow)
            return a;
    }
    return std::nullopt;
}

LinComb TwCollection::to_lincomb(ObjId tw_src, ObjId tw_tgt, const FreeMorphism& f) const {
    LinComb out;
    for (const auto& [cell_key, cell] : f.entries) {
        for (const auto& [g, c] : cell) {
            auto a = find_slot(tw_src, tw_tgt, cell_key.first, cell_key.second, g);
            if (!a)
                throw std::invalid_argument(
                    "matrix entry (" + std::to_string(cell_key.first) + "," +
                    std::to_string(cell_key.second) + ") has no slot between '" +
                    quiver_->object_name(tw_src) + "' and '" + quiver_->object_name(tw_tgt) + "'");
            lincomb_add(out, *a, c);
        }
    }
    return out;
}

FreeMorphism TwCollection::to_matrix(const LinComb& l) const {
    FreeMorphism out;
    for (const auto& [a, c] : l) {
        const Slot& s = slots_.at(a);
        out.add(s.src_summand, s.tgt_summand, s.base_arrow, c);
    }
    return out;
}

std::optional<ObjId> TwCollection::base_object_of(ObjId tw_obj) const {
    if (tw_obj < 0 || tw_obj >= static_cast<ObjId>(objects_.size())) return std::nullopt;
    const TwistedObject& t = objects_[static_cast<size_t>(tw_obj)];
    if (t.carrier.summands.size() != 1) return std::nullopt;
    if (t.carrier.summands[0].shift != 0) return std::nullopt;
    if (!t.delta.is_zero()) return std::nullopt;
    return t.carrier.summands[0].object;
}

namespace {

struct Site {
    ObjId tw_obj;
    int summand;
    int shift;
};

// All (object, summand) positions of each base object inside the collection.
std::map<ObjId, std::vector<Site>> site_index(const TwCollection& tw) {
    std::map<ObjId, std::vector<Site>> sites;
    for (ObjId m = 0; m < static_cast<ObjId>(tw.objects().size()); ++m) {
        const FreeObject& car = tw.objects()[static_cast<size_t>(m)].carrier;
        for (int k = 0; k < static_cast<int>(car.summands.size()); ++k)
            sites[car.summands[k].object].push_back(Site{m, k, car.summands[k].shift});
    }
    return sites;
}

}  // namespace

Cochain embed_cochain(const TwCollection& tw, const Cochain& phi) {
    if (phi.level() != Level::Base)
        throw std::invalid_argument("entrywise extension expects a base-level cochain");
    if (phi.quiver().get() != tw.base().get())
        throw std::invalid_argument("cochain does not live on the collection's base quiver");
    const int n = phi.arity();
    const int internal = phi.internal_degree();
    Cochain out(tw.quiver(), Level::Base, n, phi.degree());
    if (phi.is_zero()) return out;

    const GradedQuiver& base = *tw.base();
    auto sites = site_index(tw);

    for (const auto& [key, val] : phi.table()) {
        std::vector<const std::vector<Site>*> candidates;
        bool dead = false;
        for (ObjId a : key.path) {
            auto it = sites.find(a);
            if (it == sites.end()) {
                dead = true;
                break;
            }
            candidates.push_back(&it->second);
        }
        if (dead) continue;

        std::vector<size_t> pick(key.path.size(), 0);
        while (true) {
            auto site_at = [&](int pos) -> const Site& {
                return (*candidates[static_cast<size_t>(pos)])[pick[static_cast<size_t>(pos)]];
            };
            // Shift jumps and unshifted entry degrees in tensor order (the
            // leftmost tensor factor is the last path argument).
            std::vector<int> jump;
            std::vector<int> entry_deg;
            for (int l = 1; l <= n; ++l) {
                jump.push_back(site_at(n + 1 - l).shift - site_at(n - l).shift);
                entry_deg.push_back(base.arrow(key.args[static_cast<size_t>(n - l)]).degree);
            }
            SignExponent eps = canonical_iso_sign(site_at(n).shift - site_at(0).shift, jump,
                                                  internal, entry_deg);

            std::vector<ObjId> path;
            path.reserve(key.path.size());
            for (int pos = 0; pos <= n; ++pos) path.push_back(site_at(pos).tw_obj);
            std::vector<ArrowId> args;
            args.reserve(static_cast<size_t>(n));
            for (int pos = 0; pos < n; ++pos) {
                auto a = tw.find_slot(path[static_cast<size_t>(pos)],
                                      path[static_cast<size_t>(pos) + 1], site_at(pos).summand,
                                      site_at(pos + 1).summand,
                                      key.args[static_cast<size_t>(pos)]);
                if (!a) throw std::logic_error("missing slot in entrywise extension");
                args.push_back(*a);
            }
            CochainKey tkey{path, args};
            for (const auto& [w, cw] : val) {
                auto va = tw.find_slot(path.front(), path.back(), site_at(0).summand,
                                       site_at(n).summand, w);
                if (!va) throw std::logic_error("missing value slot in entrywise extension");
                out.add(tkey, *va, eps.apply(cw));
            }

            size_t pos = 0;
            while (pos < pick.size()) {
                if (++pick[pos] < candidates[pos]->size()) break;
                pick[pos] = 0;
                ++pos;
            }
            if (pos == pick.size()) break;
        }
    }
    return out;
}

MixedCochain embed_cochain(const TwCollection& tw, const MixedCochain& phi) {
    if (phi.level() != Level::Base)
        throw std::invalid_argument("entrywise extension expects a base-level cochain");
    MixedCochain out(tw.quiver(), Level::Base, phi.degree());
    for (const auto& [arity, part] : phi.parts()) out.add_part(embed_cochain(tw, part));
    return out;
}

MixedCochain embr_delta(const TwCollection& tw, const MixedCochain& phi) {
    if (phi.level() != Level::Base)
        throw std::invalid_argument("brace section expects a base-level cochain");
    MixedCochain hat = suspend(embed_cochain(tw, phi));
    MixedCochain delta_hat(suspend(tw.delta_cochain()));
    MixedCochain acc = hat;
    // Finitely many arity components make the insertion series a finite sum:
    // inserting more arguments than the largest arity gives zero.
    for (int k = 1; k <= std::max(phi.max_arity(), 0); ++k) {
        std::vector<MixedCochain> ys(static_cast<size_t>(k), delta_hat);
        acc = acc + brace(hat, ys);
    }
    return unsuspend(acc);
}

MixedCochain embr_delta(const TwCollection& tw, const Cochain& phi) {
    return embr_delta(tw, MixedCochain(phi));
}

Cochain project_base(const TwCollection& tw, const Cochain& c) {
    if (c.quiver().get() != tw.quiver().get())
        throw std::invalid_argument("cochain does not live on the collection's quiver");
    // Read back at one distinguished plain copy per base object (the first in
    // collection order); otherwise a collection holding several untwisted
    // copies of the same object would multiply-count every entry.
    std::map<ObjId, ObjId> readback;  // base object -> designated copy
    for (ObjId m = 0; m < static_cast<ObjId>(tw.objects().size()); ++m)
        if (auto b = tw.base_object_of(m); b && !readback.count(*b)) readback.emplace(*b, m);
    Cochain out(tw.base(), c.level(), c.arity(), c.degree());
    for (const auto& [key, val] : c.table()) {
        std::vector<ObjId> path;
        bool keep = true;
        for (ObjId m : key.path) {
            auto b = tw.base_object_of(m);
            if (!b || readback.at(*b) != m) {
                keep = false;
                break;
            }
            path.push_back(*b);
        }
        if (!keep) continue;
        std::vector<ArrowId> args;
        for (ArrowId a : key.args) args.push_back(tw.slot(a).base_arrow);
        CochainKey bkey{path, args};
        for (const auto& [w, cw] : val) out.add(bkey, tw.slot(w).base_arrow, cw);
    }
    return out;
}

MixedCochain project_base(const TwCollection& tw, const MixedCochain& c) {
    MixedCochain out(tw.base(), c.level(), c.degree());
    for (const auto& [arity, part] : c.parts()) out.add_part(project_base(tw, part));
    return out;
}

SignExponent lembr_sign(int n, int i, int j) {
    long long nn = n;
    return SignExponent::of(nn * i + static_cast<long long>(j) * (nn * (nn - 1) / 2));
}

Cochain eval_diagonal(const Cochain& phi, const Cochain& delta0) {
    if (delta0.arity() != 0)
        throw std::invalid_argument("diagonal evaluation expects an arity-0 argument cochain");
    if (phi.level() != Level::Base || delta0.level() != Level::Base)
        throw std::invalid_argument("diagonal evaluation expects base-level cochains");
    if (phi.quiver().get() != delta0.quiver().get())
        throw std::invalid_argument("diagonal evaluation expects cochains on one quiver");
    const int n = phi.arity();
    Cochain out(phi.quiver(), Level::Base, 0,
                phi.internal_degree() + n * delta0.internal_degree());
    for (const auto& [key, val] : phi.table()) {
        ObjId at = key.path[0];
        bool constant = true;
        for (ObjId a : key.path)
            if (a != at) {
                constant = false;
                break;
            }
        if (!constant) continue;
        LinComb d_at = delta0.value(CochainKey{{at}, {}});
        Scalar factor = Scalar::one(phi.quiver()->field());
        bool vanished = false;
        for (ArrowId a : key.args) {
            auto it = d_at.find(a);
            if (it == d_at.end()) {
                vanished = true;
                break;
            }
            factor = factor * it->second;
        }
        if (vanished) continue;
        out.add(CochainKey{{at}, {}}, val, factor);
    }
    return out;
}

LinComb evaluate_multilinear(const Cochain& c, const std::vector<ObjId>& path,
                             const std::vector<LinComb>& args) {
    if (static_cast<int>(path.size()) != c.arity() + 1 ||
        static_cast<int>(args.size()) != c.arity())
        throw std::invalid_argument("argument count does not match the cochain arity");
    LinComb out;
    for (const auto& a : args)
        if (a.empty()) return out;
    std::vector<LinComb::const_iterator> pick;
    for (const auto& a : args) pick.push_back(a.begin());
    while (true) {
        Scalar factor = Scalar::one(c.quiver()->field());
        std::vector<ArrowId> arrows;
        arrows.reserve(args.size());
        for (const auto& it : pick) {
            arrows.push_back(it->first);
            factor = factor * it->second;
        }
        LinComb v = c.value(CochainKey{path, arrows});
        if (!v.empty()) lincomb_add(out, v, factor);
        size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] != args[pos].end()) break;
            pick[pos] = args[pos].begin();
            ++pos;
        }
        if (pick.empty() || pos == pick.size()) break;
    }
    return out;
}

FreeMorphism compose_free(const Cochain& base_m, const FreeMorphism& first,
                          const FreeMorphism& second) {
    FreeMorphism out;
    for (const auto& [pq, low] : first.entries) {
        for (const auto& [qr, high] : second.entries) {
            if (pq.second != qr.first) continue;
            LinComb v = eval_arity2(base_m, low, high);
            for (const auto& [a, c] : v) out.add(pq.first, qr.second, a, c);
        }
    }
    return out;
}

WindowCategory build_pcom(const StructuredCategory& base_linear,
                          const std::vector<TwistedObject>& objects) {
    if (base_linear.kind != StructureKind::Linear)
        throw std::invalid_argument("precomplex construction expects a linear base");
    TwCollection tw(base_linear.quiver, objects);
    auto section = [&tw](const MixedCochain& m) { return embr_delta(tw, m); };
    StructuredCategory cat = transport(section, tw.quiver(), StructureKind::Cdg, base_linear);
    return WindowCategory{std::move(tw), std::move(cat)};
}

WindowCategory build_com(const StructuredCategory& base_linear,
                         const std::vector<TwistedObject>& objects) {
    if (base_linear.kind != StructureKind::Linear)
        throw std::invalid_argument("complex construction expects a linear base");
    const Cochain* m = base_linear.composition();
    if (!m) throw std::invalid_argument("linear base without a composition");
    for (const auto& t : objects) {
        FreeMorphism square = compose_free(*m, t.delta, t.delta);
        if (!square.is_zero())
            throw std::invalid_argument("twist of '" + t.carrier.name +
                                        "' does not square to zero");
    }
    WindowCategory wc = build_pcom(base_linear, objects);
    StructuredCategory dg(wc.collection.quiver(), StructureKind::Dg, wc.category.mu);
    return WindowCategory{std::move(wc.collection), std::move(dg)};
}

MixedCochain closed_form_structure(const TwCollection& tw, const StructuredCategory& base) {
    if (base.kind != StructureKind::Linear)
        throw std::invalid_argument("closed form requires a linear base");
    if (base.quiver.get() != tw.base().get())
        throw std::invalid_argument("collection and structure disagree on the base quiver");
    for (ArrowId a = 0; a < base.quiver->arrow_count(); ++a)
        if (base.quiver->arrow(a).degree != 0)
            throw std::invalid_argument("closed form requires a base concentrated in degree 0");
    const Cochain* m = base.composition();
    if (!m) throw std::invalid_argument("linear base without a composition");

    const QuiverPtr& qp = tw.quiver();
    const GradedQuiver& q = *qp;
    const FieldSpec& field = q.field();
    Scalar one = Scalar::one(field);
    int count = q.object_count();

    Cochain comp(qp, Level::Base, 2, 0);
    for (ObjId m0 = 0; m0 < count; ++m0) {
        for (ObjId m1 = 0; m1 < count; ++m1) {
            for (ObjId m2 = 0; m2 < count; ++m2) {
                for (ArrowId a1 : q.hom(m0, m1)) {
                    const TwCollection::Slot& s1 = tw.slot(a1);
                    for (ArrowId a2 : q.hom(m1, m2)) {
                        const TwCollection::Slot& s2 = tw.slot(a2);
                        if (s1.tgt_summand != s2.src_summand) continue;
                        LinComb v = eval_arity2(*m, LinComb{{s1.base_arrow, one}},
                                                LinComb{{s2.base_arrow, one}});
                        if (v.empty()) continue;
                        CochainKey key{{m0, m1, m2}, {a1, a2}};
                        for (const auto& [w, c] : v) {
                            auto slot = tw.find_slot(m0, m2, s1.src_summand, s2.tgt_summand, w);
                            if (!slot) throw std::logic_error("missing composite slot");
                            comp.add(key, *slot, c);
                        }
                    }
                }
            }
        }
    }

    Cochain diff(qp, Level::Base, 1, 1);
    for (ObjId m0 = 0; m0 < count; ++m0) {
        for (ObjId m1 = 0; m1 < count; ++m1) {
            for (ArrowId a : q.hom(m0, m1)) {
                const TwCollection::Slot& s = tw.slot(a);
                FreeMorphism f;
                f.add(s.src_summand, s.tgt_summand, s.base_arrow, one);
                const FreeMorphism& d_src = tw.objects()[static_cast<size_t>(m0)].delta;
                const FreeMorphism& d_tgt = tw.objects()[static_cast<size_t>(m1)].delta;
                FreeMorphism total = compose_free(*m, f, d_tgt);
                Scalar trail = SignExponent::of(q.arrow(a).degree + 1).scalar(field);
                FreeMorphism fd = compose_free(*m, d_src, f);
                for (const auto& [cell_key, cell] : fd.entries)
                    for (const auto& [g, c] : cell)
                        total.add(cell_key.first, cell_key.second, g, trail * c);
                if (total.is_zero()) continue;
                LinComb v = tw.to_lincomb(m0, m1, total);
                diff.add(CochainKey{{m0, m1}, {a}}, v, one);
            }
        }
    }

    Cochain curv(qp, Level::Base, 0, 2);
    for (ObjId m0 = 0; m0 < count; ++m0) {
        const FreeMorphism& d = tw.objects()[static_cast<size_t>(m0)].delta;
        FreeMorphism square = compose_free(*m, d, d);
        if (square.is_zero()) continue;
        LinComb v = tw.to_lincomb(m0, m0, square);
        curv.add(CochainKey{{m0}, {}}, v, -one);
    }

    MixedCochain out(qp, Level::Base, 2);
    if (!curv.is_zero()) out.add_part(curv);
    if (!diff.is_zero()) out.add_part(diff);
    if (!comp.is_zero()) out.add_part(comp);
    return out;
}

Cochain zero_part_oracle(const TwCollection& tw, const MixedCochain& phi) {
    if (phi.level() != Level::Base)
        throw std::invalid_argument("zero-part oracle expects a base-level cochain");
    const int total = phi.hochschild_degree();
    Cochain out(tw.quiver(), Level::Base, 0, total);
    const Cochain& delta0 = tw.delta_cochain();
    for (const auto& [arity, part] : phi.parts()) {
        if (part.is_zero()) continue;
        Cochain contracted = eval_diagonal(embed_cochain(tw, part), delta0);
        long long a = arity;
        SignExponent sign = SignExponent::of(a * (total - a) + a * (a - 1) / 2);
        out = out + contracted.scaled(sign.scalar(tw.quiver()->field()));
    }
    return out;
}

}  // namespace embrace
