#include "embrace/quiver.hpp"

#include <sstream>

namespace embrace {

ObjId GradedQuiver::add_object(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("object name must be nonempty");
    if (object_index_.count(name)) throw std::invalid_argument("duplicate object name '" + name + "'");
    objects_.push_back(name);
    ObjId id = static_cast<ObjId>(objects_.size()) - 1;
    object_index_.emplace(name, id);
    return id;
}

ArrowId GradedQuiver::add_arrow(const std::string& name, ObjId src, ObjId tgt, int degree) {
    if (src < 0 || src >= object_count() || tgt < 0 || tgt >= object_count())
        throw std::invalid_argument("arrow endpoints out of range");
    if (degree < window_lo_ || degree > window_hi_)
        throw std::invalid_argument("arrow '" + name + "' degree " + std::to_string(degree) +
                                    " outside declared window");
    if (find_arrow(src, tgt, name))
        throw std::invalid_argument("duplicate arrow name '" + name + "' in one hom space");
    arrows_.push_back(Arrow{name, src, tgt, degree});
    ArrowId id = static_cast<ArrowId>(arrows_.size()) - 1;
    hom_[{src, tgt}].push_back(id);
    return id;
}

std::optional<ObjId> GradedQuiver::find_object(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<ArrowId>& GradedQuiver::hom(ObjId src, ObjId tgt) const {
    static const std::vector<ArrowId> empty;
    auto it = hom_.find({src, tgt});
    return it == hom_.end() ? empty : it->second;
}

std::optional<ArrowId> GradedQuiver::find_arrow(ObjId src, ObjId tgt, const std::string& name) const {
    for (ArrowId a : hom(src, tgt))
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

std::shared_ptr<GradedQuiver> shift_quiver(const GradedQuiver& q, int i) {
    auto out = std::make_shared<GradedQuiver>(q.field(), q.degree_window().first - i,
                                              q.degree_window().second - i);
    for (ObjId o = 0; o < q.object_count(); ++o) out->add_object(q.object_name(o));
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        out->add_arrow(ar.name, ar.src, ar.tgt, ar.degree - i);
    }
    return out;
}

void lincomb_add(LinComb& target, ArrowId a, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = target.find(a);
    if (it == target.end()) {
        target.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) target.erase(it);
    }
}

void lincomb_add(LinComb& target, const LinComb& other, const Scalar& factor) {
    for (auto& [a, c] : other) lincomb_add(target, a, factor * c);
}

LinComb lincomb_scale(const LinComb& l, const Scalar& c) {
    LinComb out;
    if (c.is_zero()) return out;
    for (auto& [a, v] : l) out.emplace(a, c * v);
    return out;
}

bool lincomb_is_zero(const LinComb& l) { return l.empty(); }

std::string lincomb_str(const GradedQuiver& q, const LinComb& l) {
    if (l.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [a, c] : l) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << q.arrow(a).name;
    }
    return out.str();
}

}  // namespace embrace
