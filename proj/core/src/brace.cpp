#include "embrace/brace.hpp"

#include <algorithm>

namespace embrace {

namespace {

// output arrow -> (key, coefficient) pairs of a cochain, for join lookups
using OutputIndex = std::map<ArrowId, std::vector<std::pair<const CochainKey*, Scalar>>>;

OutputIndex build_output_index(const Cochain& c) {
    OutputIndex idx;
    for (auto& [key, value] : c.table())
        for (auto& [arrow, coeff] : value) idx[arrow].emplace_back(&key, coeff);
    return idx;
}

// ascending k-subsets of {0..n-1}
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& cb) {
    if (k > n) return;
    std::vector<int> combo(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            cb(combo);
            return;
        }
        for (int v = start; v <= n - (k - depth); ++v) {
            combo[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

Cochain brace(const Cochain& x, const std::vector<Cochain>& ys) {
    if (x.level() != Level::Suspended) throw std::logic_error("brace expects suspended cochains");
    const QuiverPtr& q = x.quiver();
    const GradedQuiver& quiv = *q;
    const FieldSpec& field = quiv.field();
    const int n = x.arity();
    const int k = static_cast<int>(ys.size());

    int result_arity = n - k;
    int result_degree = x.degree();
    for (auto& y : ys) {
        if (y.level() != Level::Suspended) throw std::logic_error("brace expects suspended cochains");
        if (y.quiver() != q) throw std::logic_error("brace arguments live on different quivers");
        result_arity += y.arity();
        result_degree += y.degree();
    }
    Cochain result(q, Level::Suspended, std::max(result_arity, 0), result_degree);
    if (k > n) return result;  // arity deficit: no insertion patterns
    if (k == 0) {
        for (auto& [key, v] : x.table()) result.add(key, v, Scalar::one(field));
        return result;
    }

    std::vector<OutputIndex> indices;
    indices.reserve(k);
    for (auto& y : ys) indices.push_back(build_output_index(y));

    for (auto& [kx, vx] : x.table()) {
        for_each_combination(n, k, [&, &kx = kx, &vx = vx](const std::vector<int>& combo) {
            // y_1 takes the highest chosen slot, so 0-based y index i sits at
            // slot combo[k-1-i]; slot s consumes the x-argument kx.args[s].
            std::vector<int> slot_to_y(n, -1);
            std::vector<const std::vector<std::pair<const CochainKey*, Scalar>>*> cands(k);
            for (int i = 0; i < k; ++i) {
                int slot = combo[k - 1 - i];
                slot_to_y[slot] = i;
                auto it = indices[i].find(kx.args[slot]);
                if (it == indices[i].end()) return;
                cands[i] = &it->second;
            }
            std::vector<size_t> pick(k, 0);
            while (true) {
                CochainKey key;
                key.path.push_back(kx.path[0]);
                std::vector<std::pair<int, int>> block(k);  // [start,end) in result args
                Scalar coeff = Scalar::one(field);
                for (int slot = 0; slot < n; ++slot) {
                    int yi = slot_to_y[slot];
                    if (yi < 0) {
                        key.args.push_back(kx.args[slot]);
                        key.path.push_back(kx.path[slot + 1]);
                    } else {
                        const CochainKey& ky = *(*cands[yi])[pick[yi]].first;
                        block[yi].first = static_cast<int>(key.args.size());
                        for (size_t j = 0; j < ky.args.size(); ++j) {
                            key.args.push_back(ky.args[j]);
                            key.path.push_back(ky.path[j + 1]);
                        }
                        block[yi].second = static_cast<int>(key.args.size());
                        coeff *= (*cands[yi])[pick[yi]].second;
                    }
                }
                // each inserted cochain crosses the result arguments above its block
                SignExponent sign;
                for (int i = 0; i < k; ++i) {
                    int above = 0;
                    for (int a = block[i].second; a < static_cast<int>(key.args.size()); ++a)
                        above += quiv.arrow(key.args[a]).degree - 1;
                    sign = sign + koszul_swap_sign(ys[i].degree(), above);
                }
                result.add(key, vx, sign.apply(coeff));

                int i = 0;
                while (i < k && ++pick[i] == cands[i]->size()) pick[i++] = 0;
                if (i == k) break;
            }
        });
    }
    return result;
}

MixedCochain brace(const MixedCochain& x, const std::vector<MixedCochain>& ys) {
    if (x.level() != Level::Suspended) throw std::logic_error("brace expects suspended cochains");
    int result_degree = x.degree();
    for (auto& y : ys) result_degree += y.degree();
    MixedCochain result(x.quiver(), Level::Suspended, result_degree);
    // expand multilinearly over the homogeneous components of every argument
    std::vector<std::vector<const Cochain*>> choices;
    for (auto& y : ys) {
        std::vector<const Cochain*> comps;
        for (auto& [n, c] : y.parts()) comps.push_back(&c);
        if (comps.empty()) return result;  // braces with a zero argument vanish
        choices.push_back(std::move(comps));
    }
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<Cochain> args;
        for (size_t i = 0; i < choices.size(); ++i) args.push_back(*choices[i][pick[i]]);
        for (auto& [n, xc] : x.parts()) result.add_part(brace(xc, args));
        size_t i = 0;
        while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == choices.size()) break;
    }
    return result;
}

Cochain lie_bracket(const Cochain& x, const Cochain& y) {
    Cochain xy = brace(x, {y});
    Cochain yx = brace(y, {x});
    SignExponent s = koszul_swap_sign(x.degree(), y.degree());
    return xy - yx.scaled(s.scalar(x.quiver()->field()));
}

MixedCochain lie_bracket(const MixedCochain& x, const MixedCochain& y) {
    MixedCochain xy = brace(x, {y});
    MixedCochain yx = brace(y, {x});
    SignExponent s = koszul_swap_sign(x.degree(), y.degree());
    return xy - yx.scaled(s.scalar(x.quiver()->field()));
}

MixedCochain base_brace(const MixedCochain& x, const std::vector<MixedCochain>& ys) {
    std::vector<MixedCochain> sus;
    sus.reserve(ys.size());
    for (auto& y : ys) sus.push_back(suspend(y));
    return unsuspend(brace(suspend(x), sus));
}

Cochain dot(const Cochain& phi, const Cochain& psi) {
    if (phi.level() != Level::Base || psi.level() != Level::Base)
        throw std::logic_error("dot expects base-level cochains");
    if (phi.quiver() != psi.quiver()) throw std::logic_error("dot arguments live on different quivers");
    const QuiverPtr& q = phi.quiver();
    const GradedQuiver& quiv = *q;
    const int n = phi.arity();
    const int m = psi.arity();
    Cochain result(q, Level::Base, std::max(n + m - 1, 0),
                   phi.internal_degree() + psi.internal_degree());
    if (n == 0) return result;  // empty insertion sum

    OutputIndex index = build_output_index(psi);
    for (auto& [kp, vp] : phi.table()) {
        for (int slot = 0; slot < n; ++slot) {  // slot == number of free slots below psi
            auto it = index.find(kp.args[slot]);
            if (it == index.end()) continue;
            for (auto& [ky_ptr, cpsi] : it->second) {
                const CochainKey& ky = *ky_ptr;
                CochainKey key;
                key.path.push_back(kp.path[0]);
                int block_end = 0;
                for (int s = 0; s < n; ++s) {
                    if (s != slot) {
                        key.args.push_back(kp.args[s]);
                        key.path.push_back(kp.path[s + 1]);
                    } else {
                        for (size_t j = 0; j < ky.args.size(); ++j) {
                            key.args.push_back(ky.args[j]);
                            key.path.push_back(ky.path[j + 1]);
                        }
                        block_end = static_cast<int>(key.args.size());
                    }
                }
                int above = 0;
                for (int a = block_end; a < static_cast<int>(key.args.size()); ++a)
                    above += quiv.arrow(key.args[a]).degree;
                SignExponent sign =
                    SignExponent::of(static_cast<long long>(phi.hochschild_degree() + slot + 1) *
                                     (m + 1)) +
                    koszul_swap_sign(psi.internal_degree(), above);
                result.add(key, vp, sign.apply(cpsi));
            }
        }
    }
    return result;
}

MixedCochain dot(const MixedCochain& phi, const MixedCochain& psi) {
    MixedCochain result(phi.quiver(), Level::Base, phi.degree() + psi.degree() - 1);
    for (auto& [np, cp] : phi.parts())
        for (auto& [ns, cs] : psi.parts()) result.add_part(dot(cp, cs));
    return result;
}

MixedCochain dot_commutator(const MixedCochain& w, const MixedCochain& phi) {
    MixedCochain wphi = dot(w, phi);
    MixedCochain phiw = dot(phi, w);
    SignExponent s = koszul_swap_sign(w.degree() + 1, phi.degree() + 1);
    return wphi - phiw.scaled(s.scalar(w.quiver()->field()));
}

}  // namespace embrace
