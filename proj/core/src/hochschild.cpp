#include "embrace/hochschild.hpp"

#include <functional>

namespace embrace {

namespace {

// enumerate every basis key of the given arity (paths filled with basis arrows)
void for_each_key(const GradedQuiver& q, int arity,
                  const std::function<void(const CochainKey&)>& cb) {
    for (auto& path : enumerate_paths(q, arity)) {
        CochainKey key;
        key.path = path;
        std::function<void(int)> rec = [&](int pos) {
            if (pos == arity) {
                cb(key);
                return;
            }
            for (ArrowId a : q.hom(path[pos], path[pos + 1])) {
                key.args.push_back(a);
                rec(pos + 1);
                key.args.pop_back();
            }
        };
        rec(0);
    }
}

}  // namespace

MixedCochain differential_susp(const MixedCochain& b, const MixedCochain& x) {
    return lie_bracket(b, x);
}

MixedCochain hochschild_differential(const MixedCochain& b, const MixedCochain& phi) {
    return unsuspend(lie_bracket(b, suspend(phi)));
}

MixedCochain hochschild_differential(const MixedCochain& b, const Cochain& phi) {
    return hochschild_differential(b, MixedCochain(phi));
}

MixedCochain commutator_differential(const MixedCochain& mu_base, const MixedCochain& phi) {
    return dot_commutator(mu_base, phi);
}

Cochain horizontal_differential(const Cochain& m, const Cochain& phi) {
    MixedCochain res = dot_commutator(MixedCochain(m), MixedCochain(phi));
    return res.part_or_zero(phi.arity() + 1);
}

Cochain classical_differential(const Cochain& m, const Cochain& phi) {
    if (m.level() != Level::Base || phi.level() != Level::Base)
        throw std::logic_error("classical differential expects base-level cochains");
    if (m.quiver() != phi.quiver())
        throw std::logic_error("classical differential arguments live on different quivers");
    const QuiverPtr& q = phi.quiver();
    const GradedQuiver& quiv = *q;
    for (ArrowId a = 0; a < quiv.arrow_count(); ++a)
        if (quiv.arrow(a).degree != 0)
            throw std::logic_error("classical differential requires a degree-zero quiver");
    const int n = phi.arity();
    const Scalar one = Scalar::one(quiv.field());
    Cochain result(q, Level::Base, n + 1, 0);

    for_each_key(quiv, n + 1, [&](const CochainKey& key) {
        LinComb val;
        // leftmost tensor factor composed after phi of the rest
        {
            CochainKey inner;
            inner.path.assign(key.path.begin(), key.path.end() - 1);
            inner.args.assign(key.args.begin(), key.args.end() - 1);
            for (auto& [arr, c] : phi.value(inner)) {
                CochainKey pair;
                pair.path = {key.path.front(), key.path[n], key.path[n + 1]};
                pair.args = {arr, key.args[n]};
                lincomb_add(val, m.value(pair), c);
            }
        }
        // inner compositions: contract (a_t, a_{t+1}) in path positions; the
        // alternating sign counts from the leftmost tensor factor
        for (int t = 1; t <= n; ++t) {
            CochainKey pair;
            pair.path = {key.path[t - 1], key.path[t], key.path[t + 1]};
            pair.args = {key.args[t - 1], key.args[t]};
            Scalar sgn = SignExponent::of(n + 1 - t).scalar(quiv.field());
            for (auto& [arr, c] : m.value(pair)) {
                CochainKey inner;
                inner.path = key.path;
                inner.path.erase(inner.path.begin() + t);
                inner.args = key.args;
                inner.args[t - 1] = arr;
                inner.args.erase(inner.args.begin() + t);
                lincomb_add(val, phi.value(inner), sgn * c);
            }
        }
        // phi of the upper arguments composed after the rightmost factor
        {
            CochainKey inner;
            inner.path.assign(key.path.begin() + 1, key.path.end());
            inner.args.assign(key.args.begin() + 1, key.args.end());
            Scalar sgn = SignExponent::of(n + 1).scalar(quiv.field());
            for (auto& [arr, c] : phi.value(inner)) {
                CochainKey pair;
                pair.path = {key.path[0], key.path[1], key.path[n + 1]};
                pair.args = {key.args.front(), arr};
                lincomb_add(val, m.value(pair), sgn * c);
            }
        }
        result.add(key, val, one);
    });
    return result;
}

Cochain project_zero(const MixedCochain& x) {
    if (const Cochain* p = x.part(0)) return *p;
    return Cochain(x.quiver(), x.level(), 0, x.degree());
}

MixedCochain sigma_zero(const Cochain& x0) {
    if (x0.arity() != 0) throw std::logic_error("sigma_zero expects an arity-0 cochain");
    return MixedCochain(x0);
}

Cochain b1_delta(const MixedCochain& b, const Cochain& x0) {
    if (b.level() != Level::Suspended || x0.level() != Level::Suspended)
        throw std::logic_error("b1_delta expects suspended inputs");
    if (x0.arity() != 0) throw std::logic_error("b1_delta expects an arity-0 cochain");
    return brace(b.part_or_zero(1), {x0});
}

HochschildBasis::HochschildBasis(QuiverPtr q, int hoch_degree, int arity_max)
    : quiver_(std::move(q)), degree_(hoch_degree) {
    if (arity_max < 0) throw std::invalid_argument("arity bound must be nonnegative");
    for (int a = 0; a <= arity_max; ++a) {
        CochainBasis basis(quiver_, a, hoch_degree - a);
        if (basis.dimension() == 0) continue;
        dimension_ += basis.dimension();
        components_.emplace_back(a, std::move(basis));
    }
}

Vec HochschildBasis::coordinates(const MixedCochain& phi) const {
    if (phi.level() != Level::Base || phi.degree() != degree_)
        throw std::logic_error("cochain does not match the basis degree");
    Vec out;
    for (auto& [a, basis] : components_) {
        Vec part = basis.coordinates(phi.part_or_zero(a));
        out.insert(out.end(), part.begin(), part.end());
    }
    for (auto& [a, c] : phi.parts()) {
        if (c.is_zero()) continue;
        bool covered = false;
        for (auto& [aa, basis] : components_)
            if (aa == a) covered = true;
        if (!covered) throw std::logic_error("cochain has support beyond the basis arity bound");
    }
    return out;
}

MixedCochain HochschildBasis::from_coordinates(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dimension_)
        throw std::logic_error("coordinate vector has the wrong length");
    MixedCochain out(quiver_, Level::Base, degree_);
    size_t offset = 0;
    for (auto& [a, basis] : components_) {
        Vec slice(coords.begin() + offset, coords.begin() + offset + basis.dimension());
        offset += basis.dimension();
        Cochain c = basis.from_coordinates(slice);
        if (!c.is_zero()) out.add_part(c);
    }
    return out;
}

SparseMatrix differential_matrix(const MixedCochain& b, const HochschildBasis& domain,
                                 const HochschildBasis& codomain) {
    const FieldSpec& f = domain.quiver()->field();
    std::vector<SparseMatrix::Entry> entries;
    int col = 0;
    for (auto& [a, basis] : domain.components()) {
        for (int i = 0; i < basis.dimension(); ++i, ++col) {
            Cochain unit(domain.quiver(), Level::Base, a, domain.hoch_degree() - a);
            unit.add(basis.element(i).first, basis.element(i).second, Scalar::one(f));
            Vec coords = codomain.coordinates(hochschild_differential(b, unit));
            for (int r = 0; r < static_cast<int>(coords.size()); ++r)
                if (!coords[r].is_zero()) entries.push_back({r, col, coords[r]});
        }
    }
    return SparseMatrix::from_triplets(f, codomain.dimension(), domain.dimension(), entries);
}

CohomologyResult hochschild_cohomology(const MixedCochain& b, int degree, int arity_max) {
    QuiverPtr q = b.quiver();
    const FieldSpec& f = q->field();
    HochschildBasis mid(q, degree, arity_max);
    HochschildBasis above(q, degree + 1, arity_max + 1);
    HochschildBasis below(q, degree - 1, std::max(arity_max - 1, 0));
    SparseMatrix d_here = differential_matrix(b, mid, above);
    SparseMatrix d_prev = differential_matrix(b, below, mid);

    std::vector<Vec> kernel = kernel_basis(d_here);

    std::vector<Vec> span;
    for (int c = 0; c < below.dimension(); ++c) {
        Vec unit(below.dimension(), Scalar::zero(f));
        unit[c] = Scalar::one(f);
        span.push_back(d_prev.apply(unit));
    }
    CohomologyResult res;
    res.cocycle_dim = static_cast<int>(kernel.size());
    res.coboundary_dim =
        span.empty() ? 0 : rank(SparseMatrix::from_dense_rows(f, span, mid.dimension()));
    res.dimension = res.cocycle_dim - res.coboundary_dim;

    int current = res.coboundary_dim;
    for (auto& v : kernel) {
        std::vector<Vec> trial = span;
        trial.push_back(v);
        int r = rank(SparseMatrix::from_dense_rows(f, trial, mid.dimension()));
        if (r > current) {
            res.representatives.push_back(mid.from_coordinates(v));
            span = std::move(trial);
            current = r;
        }
    }
    return res;
}

std::optional<MixedCochain> coboundary_witness(const MixedCochain& b, const MixedCochain& phi,
                                               int arity_max) {
    QuiverPtr q = phi.quiver();
    HochschildBasis domain(q, phi.degree() - 1, arity_max);
    int cod_cap = std::max(arity_max + 1, std::max(phi.max_arity(), 0));
    HochschildBasis codomain(q, phi.degree(), cod_cap);
    SparseMatrix d = differential_matrix(b, domain, codomain);
    std::optional<Vec> sol = solve(d, codomain.coordinates(phi));
    if (!sol) return std::nullopt;
    return domain.from_coordinates(*sol);
}

}  // namespace embrace
