#include "embrace/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace embrace {

Cochain::Cochain(QuiverPtr q, Level level, int arity, int degree)
    : quiver_(std::move(q)), level_(level), arity_(arity), degree_(degree) {
    if (!quiver_) throw std::invalid_argument("cochain needs a quiver");
    if (arity_ < 0) throw std::invalid_argument("cochain arity must be >= 0");
}

void Cochain::validate(const CochainKey& key, ArrowId value_arrow) const {
    const GradedQuiver& q = *quiver_;
    if (static_cast<int>(key.path.size()) != arity_ + 1 ||
        static_cast<int>(key.args.size()) != arity_)
        throw std::invalid_argument("cochain key shape does not match arity");
    int arg_total = 0;
    for (int j = 0; j < arity_; ++j) {
        const Arrow& a = q.arrow(key.args[j]);
        if (a.src != key.path[j] || a.tgt != key.path[j + 1])
            throw std::invalid_argument("cochain key arrow does not follow the path");
        arg_total += a.degree;
    }
    const Arrow& v = q.arrow(value_arrow);
    if (v.src != key.path.front() || v.tgt != key.path.back())
        throw std::invalid_argument("cochain value arrow endpoints mismatch");
    if (v.degree != internal_degree() + arg_total)
        throw std::invalid_argument("cochain value degree mismatch");
}

void Cochain::add(const CochainKey& key, ArrowId value_arrow, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    validate(key, value_arrow);
    auto it = table_.find(key);
    if (it == table_.end()) it = table_.emplace(key, LinComb{}).first;
    lincomb_add(it->second, value_arrow, coeff);
    if (it->second.empty()) table_.erase(it);
}

void Cochain::add(const CochainKey& key, const LinComb& value, const Scalar& factor) {
    for (auto& [a, c] : value) add(key, a, factor * c);
}

LinComb Cochain::value(const CochainKey& key) const {
    auto it = table_.find(key);
    return it == table_.end() ? LinComb{} : it->second;
}

bool Cochain::same_shape(const Cochain& o) const {
    return quiver_ == o.quiver_ && level_ == o.level_ && arity_ == o.arity_ && degree_ == o.degree_;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (!same_shape(o)) throw std::logic_error("cochain shape mismatch in addition");
    Cochain out = *this;
    for (auto& [k, v] : o.table_) out.add(k, v, Scalar::one(quiver_->field()));
    return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
    if (!same_shape(o)) throw std::logic_error("cochain shape mismatch in subtraction");
    Cochain out = *this;
    for (auto& [k, v] : o.table_) out.add(k, v, -Scalar::one(quiver_->field()));
    return out;
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain out(quiver_, level_, arity_, degree_);
    for (auto& [k, v] : table_) out.add(k, v, c);
    return out;
}

bool Cochain::operator==(const Cochain& o) const {
    return same_shape(o) && table_ == o.table_;
}

std::string Cochain::str() const {
    const GradedQuiver& q = *quiver_;
    std::ostringstream out;
    out << (level_ == Level::Base ? "cochain" : "susp-cochain") << "(arity=" << arity_
        << ", deg=" << degree_ << ")";
    for (auto& [k, v] : table_) {
        out << "\n  [";
        for (size_t j = 0; j < k.path.size(); ++j) {
            if (j) out << ">";
            out << q.object_name(k.path[j]);
        }
        out << "](";
        for (size_t j = 0; j < k.args.size(); ++j) {
            if (j) out << ",";
            out << q.arrow(k.args[j]).name;
        }
        out << ") -> " << lincomb_str(q, v);
    }
    return out.str();
}

MixedCochain::MixedCochain(const Cochain& single)
    : quiver_(single.quiver()), level_(single.level()),
      degree_(single.level() == Level::Base ? single.hochschild_degree() : single.degree()) {
    add_part(single);
}

const Cochain* MixedCochain::part(int arity) const {
    auto it = parts_.find(arity);
    return it == parts_.end() ? nullptr : &it->second;
}

Cochain MixedCochain::part_or_zero(int arity) const {
    if (const Cochain* p = part(arity)) return *p;
    int deg = level_ == Level::Base ? degree_ - arity : degree_;
    return Cochain(quiver_, level_, arity, deg);
}

void MixedCochain::add_part(const Cochain& c) {
    if (c.quiver() != quiver_ || c.level() != level_)
        throw std::logic_error("mixed cochain component quiver/level mismatch");
    int expected = level_ == Level::Base ? degree_ - c.arity() : degree_;
    if (c.degree() != expected)
        throw std::logic_error("mixed cochain component degree mismatch");
    auto it = parts_.find(c.arity());
    if (it == parts_.end()) {
        if (!c.is_zero()) parts_.emplace(c.arity(), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

bool MixedCochain::is_zero() const {
    for (auto& [n, c] : parts_)
        if (!c.is_zero()) return false;
    return true;
}

int MixedCochain::max_arity() const {
    int m = 0;
    for (auto& [n, c] : parts_)
        if (!c.is_zero()) m = std::max(m, n);
    return m;
}

MixedCochain MixedCochain::operator+(const MixedCochain& o) const {
    if (quiver_ != o.quiver_ || level_ != o.level_ || degree_ != o.degree_)
        throw std::logic_error("mixed cochain shape mismatch in addition");
    MixedCochain out = *this;
    for (auto& [n, c] : o.parts_) out.add_part(c);
    return out;
}

MixedCochain MixedCochain::operator-(const MixedCochain& o) const {
    return *this + o.scaled(-Scalar::one(quiver_->field()));
}

MixedCochain MixedCochain::scaled(const Scalar& c) const {
    MixedCochain out(quiver_, level_, degree_);
    for (auto& [n, p] : parts_) out.add_part(p.scaled(c));
    return out;
}

bool MixedCochain::operator==(const MixedCochain& o) const {
    if (quiver_ != o.quiver_ || level_ != o.level_ || degree_ != o.degree_) return false;
    return parts_ == o.parts_;
}

std::string MixedCochain::str() const {
    std::ostringstream out;
    out << "mixed(deg=" << degree_ << (level_ == Level::Base ? "" : ", suspended") << ")";
    for (auto& [n, c] : parts_) out << "\n" << c.str();
    return out.str();
}

namespace {

Cochain resuspend(const Cochain& c, Level target) {
    if (c.level() == target) return c;
    const GradedQuiver& q = *c.quiver();
    int target_degree = target == Level::Suspended ? c.suspended_degree() : c.internal_degree();
    Cochain out(c.quiver(), target, c.arity(), target_degree);
    for (auto& [key, v] : c.table()) {
        std::vector<int> arg_degrees;
        arg_degrees.reserve(key.args.size());
        for (ArrowId a : key.args) arg_degrees.push_back(q.arrow(a).degree);
        SignExponent s = suspension_sign(c.arity(), c.internal_degree(), arg_degrees);
        out.add(key, v, s.scalar(q.field()));
    }
    return out;
}

}  // namespace

Cochain suspend(const Cochain& c) {
    if (c.level() != Level::Base) throw std::logic_error("suspend: cochain is already suspended");
    return resuspend(c, Level::Suspended);
}

Cochain unsuspend(const Cochain& c) {
    if (c.level() != Level::Suspended) throw std::logic_error("unsuspend: cochain is not suspended");
    return resuspend(c, Level::Base);
}

MixedCochain suspend(const MixedCochain& c) {
    if (c.level() != Level::Base) throw std::logic_error("suspend: mixed cochain is already suspended");
    MixedCochain out(c.quiver(), Level::Suspended, c.degree() - 1);
    for (auto& [n, p] : c.parts()) out.add_part(suspend(p));
    return out;
}

MixedCochain unsuspend(const MixedCochain& c) {
    if (c.level() != Level::Suspended) throw std::logic_error("unsuspend: mixed cochain is not suspended");
    MixedCochain out(c.quiver(), Level::Base, c.degree() + 1);
    for (auto& [n, p] : c.parts()) out.add_part(unsuspend(p));
    return out;
}

std::vector<std::vector<ObjId>> enumerate_paths(const GradedQuiver& q, int arity) {
    std::vector<std::vector<ObjId>> out;
    std::vector<ObjId> current;
    std::function<void()> walk = [&]() {
        if (static_cast<int>(current.size()) == arity + 1) {
            out.push_back(current);
            return;
        }
        for (ObjId next = 0; next < q.object_count(); ++next) {
            if (!current.empty() && q.hom(current.back(), next).empty()) continue;
            current.push_back(next);
            walk();
            current.pop_back();
        }
    };
    walk();
    return out;
}

CochainBasis::CochainBasis(QuiverPtr q, int arity, int internal_degree)
    : quiver_(std::move(q)), arity_(arity), degree_(internal_degree) {
    const GradedQuiver& quiv = *quiver_;
    for (auto& path : enumerate_paths(quiv, arity)) {
        // odometer over argument tuples along the path
        std::vector<std::vector<ArrowId>> choices;
        for (int j = 0; j < arity; ++j) choices.push_back(quiv.hom(path[j], path[j + 1]));
        std::vector<size_t> idx(arity, 0);
        while (true) {
            CochainKey key;
            key.path = path;
            int arg_total = 0;
            for (int j = 0; j < arity; ++j) {
                key.args.push_back(choices[j][idx[j]]);
                arg_total += quiv.arrow(choices[j][idx[j]]).degree;
            }
            for (ArrowId v : quiv.hom(path.front(), path.back()))
                if (quiv.arrow(v).degree == degree_ + arg_total) elements_.emplace_back(key, v);
            int j = 0;
            while (j < arity && ++idx[j] == choices[j].size()) idx[j++] = 0;
            if (j == arity || arity == 0) break;
        }
    }
    std::sort(elements_.begin(), elements_.end(),
              [](const auto& a, const auto& b) {
                  if (!(a.first == b.first)) return a.first < b.first;
                  return a.second < b.second;
              });
}

Vec CochainBasis::coordinates(const Cochain& c) const {
    if (c.level() != Level::Base || c.arity() != arity_ || c.internal_degree() != degree_)
        throw std::logic_error("cochain does not live in this basis component");
    Vec out(elements_.size(), Scalar::zero(quiver_->field()));
    std::map<std::pair<CochainKey, ArrowId>, int> index;
    for (int i = 0; i < dimension(); ++i) index.emplace(elements_[i], i);
    for (auto& [key, v] : c.table()) {
        for (auto& [a, coeff] : v) {
            auto it = index.find({key, a});
            if (it == index.end()) throw std::logic_error("cochain entry outside enumerated basis");
            out[it->second] = coeff;
        }
    }
    return out;
}

Cochain CochainBasis::from_coordinates(const Vec& v) const {
    if (static_cast<int>(v.size()) != dimension()) throw std::invalid_argument("coordinate length mismatch");
    Cochain out(quiver_, Level::Base, arity_, degree_);
    for (int i = 0; i < dimension(); ++i) out.add(elements_[i].first, elements_[i].second, v[i]);
    return out;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.kind == FieldSpec::Kind::Prime) {
        std::uniform_int_distribution<std::uint32_t> dist(0, f.p - 1);
        return Scalar::from_residue(f, dist(rng));
    }
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    return Scalar::from_int(f, num(rng)) / Scalar::from_int(f, den(rng));
}

namespace {

// Element counts of one object path of the component, grouped by the total
// degree of the argument tuple.  Together the slices let random_cochain draw
// uniform basis elements without materializing the component, whose size grows
// exponentially with the arity on quivers with many objects.
struct PathCounts {
    std::vector<ObjId> path;
    // suffix[j] maps a degree sum to the number of argument tuples filling
    // positions j..arity-1 with that sum; suffix[arity] = {0: 1}.
    std::vector<std::map<int, long long>> suffix;
    std::map<int, long long> values;  // arrow degree -> value arrows front..back
    long long weight = 0;             // basis elements supported on this path
};

}  // namespace

Cochain random_cochain(QuiverPtr q, int arity, int internal_degree, std::mt19937_64& rng,
                       int max_entries) {
    const GradedQuiver& quiv = *q;
    Cochain out(q, Level::Base, arity, internal_degree);

    std::vector<PathCounts> slices;
    long long total = 0;
    for (auto& path : enumerate_paths(quiv, arity)) {
        PathCounts pc;
        pc.suffix.assign(static_cast<size_t>(arity) + 1, {});
        pc.suffix[static_cast<size_t>(arity)][0] = 1;
        for (int j = arity - 1; j >= 0; --j)
            for (ArrowId a : quiv.hom(path[static_cast<size_t>(j)], path[static_cast<size_t>(j) + 1])) {
                int d = quiv.arrow(a).degree;
                for (const auto& [sum, cnt] : pc.suffix[static_cast<size_t>(j) + 1])
                    pc.suffix[static_cast<size_t>(j)][sum + d] += cnt;
            }
        for (ArrowId v : quiv.hom(path.front(), path.back())) ++pc.values[quiv.arrow(v).degree];
        for (const auto& [sum, cnt] : pc.suffix[0]) {
            auto it = pc.values.find(internal_degree + sum);
            if (it != pc.values.end()) pc.weight += cnt * it->second;
        }
        if (pc.weight > 0) {
            pc.path = std::move(path);
            total += pc.weight;
            slices.push_back(std::move(pc));
        }
    }
    if (total == 0) return out;

    // Emit the basis element of the given rank: locate the path, choose the
    // argument arrows position by position by counting completions with the
    // remaining degree budget, then take the matching value arrow.
    auto emit = [&](long long r) {
        size_t s = 0;
        while (r >= slices[s].weight) r -= slices[s++].weight;
        const PathCounts& pc = slices[s];
        CochainKey key;
        key.path = pc.path;
        int partial = 0;
        for (int j = 0; j < arity; ++j) {
            for (ArrowId a :
                 quiv.hom(pc.path[static_cast<size_t>(j)], pc.path[static_cast<size_t>(j) + 1])) {
                int d = quiv.arrow(a).degree;
                long long cnt = 0;
                for (const auto& [sum, c0] : pc.suffix[static_cast<size_t>(j) + 1]) {
                    auto it = pc.values.find(internal_degree + partial + d + sum);
                    if (it != pc.values.end()) cnt += c0 * it->second;
                }
                if (r < cnt) {
                    key.args.push_back(a);
                    partial += d;
                    break;
                }
                r -= cnt;
            }
        }
        for (ArrowId v : quiv.hom(pc.path.front(), pc.path.back()))
            if (quiv.arrow(v).degree == internal_degree + partial && r-- == 0) {
                out.add(key, v, random_scalar(quiv.field(), rng));
                return;
            }
    };

    if (total <= max_entries) {
        for (long long r = 0; r < total; ++r) emit(r);
    } else {
        std::uniform_int_distribution<long long> pick(0, total - 1);
        for (int t = 0; t < max_entries; ++t) emit(pick(rng));
    }
    return out;
}

}  // namespace embrace
