#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "embrace/field.hpp"

namespace embrace {

using ObjId = int;
using ArrowId = int;

struct Arrow {
    std::string name;
    ObjId src;
    ObjId tgt;
    int degree;
};

// Quiver with basis-presented graded hom spaces over an exact field.  Every
// hom space is spanned by finitely many named basis arrows whose degrees lie
// in the declared window.
class GradedQuiver {
  public:
    GradedQuiver(const FieldSpec& f, int window_lo, int window_hi)
        : field_(f), window_lo_(window_lo), window_hi_(window_hi) {
        if (window_lo > window_hi) throw std::invalid_argument("empty degree window");
    }

    ObjId add_object(const std::string& name);
    ArrowId add_arrow(const std::string& name, ObjId src, ObjId tgt, int degree);

    const FieldSpec& field() const { return field_; }
    std::pair<int, int> degree_window() const { return {window_lo_, window_hi_}; }
    int object_count() const { return static_cast<int>(objects_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& object_name(ObjId o) const { return objects_.at(o); }
    std::optional<ObjId> find_object(const std::string& name) const;
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    // Basis arrows of a(src, tgt) in insertion order (empty if none).
    const std::vector<ArrowId>& hom(ObjId src, ObjId tgt) const;
    std::optional<ArrowId> find_arrow(ObjId src, ObjId tgt, const std::string& name) const;

  private:
    FieldSpec field_;
    int window_lo_;
    int window_hi_;
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::map<std::string, ObjId> object_index_;
    std::map<std::pair<ObjId, ObjId>, std::vector<ArrowId>> hom_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

// Shift functor on hom spaces: every basis arrow degree decreases by i, and the
// window moves with it.  Names and incidences are unchanged, so shifting by -i
// restores the original quiver verbatim.
std::shared_ptr<GradedQuiver> shift_quiver(const GradedQuiver& q, int i);

// Linear combination of basis arrows inside one hom space.
using LinComb = std::map<ArrowId, Scalar>;

void lincomb_add(LinComb& target, ArrowId a, const Scalar& c);
void lincomb_add(LinComb& target, const LinComb& other, const Scalar& factor);
LinComb lincomb_scale(const LinComb& l, const Scalar& c);
bool lincomb_is_zero(const LinComb& l);
std::string lincomb_str(const GradedQuiver& q, const LinComb& l);

}  // namespace embrace
