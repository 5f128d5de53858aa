#pragma once

#include <functional>
#include <random>

#include "embrace/signs.hpp"
#include "embrace/sparse.hpp"

namespace embrace {

// One basis tensor in the Hochschild complex: a path of objects A_0..A_n and
// composable basis arrows f_1..f_n stored in path order (f_j : A_{j-1} -> A_j).
// As a tensor the arguments read right-to-left: the leftmost tensor factor is
// the last arrow f_n.
struct CochainKey {
    std::vector<ObjId> path;
    std::vector<ArrowId> args;

    bool operator<(const CochainKey& o) const {
        if (path != o.path) return path < o.path;
        return args < o.args;
    }
    bool operator==(const CochainKey& o) const { return path == o.path && args == o.args; }
};

// Base-level cochains carry an internal degree i (value degree minus the sum of
// argument degrees); suspended cochains carry the shifted degree i + arity - 1
// and read all argument/value degrees lowered by one.
enum class Level { Base, Suspended };

// Homogeneous sparse cochain: a map from basis tensors to linear combinations
// in the hom space a(A_0, A_n).  Entries are validated on insertion, so any
// degree bookkeeping error inside the engine surfaces immediately.
class Cochain {
  public:
    Cochain(QuiverPtr q, Level level, int arity, int degree);

    const QuiverPtr& quiver() const { return quiver_; }
    Level level() const { return level_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }
    int internal_degree() const { return level_ == Level::Base ? degree_ : degree_ + 1 - arity_; }
    int hochschild_degree() const { return internal_degree() + arity_; }
    int suspended_degree() const { return hochschild_degree() - 1; }

    void add(const CochainKey& key, ArrowId value_arrow, const Scalar& coeff);
    void add(const CochainKey& key, const LinComb& value, const Scalar& factor);
    const std::map<CochainKey, LinComb>& table() const { return table_; }
    LinComb value(const CochainKey& key) const;
    bool is_zero() const { return table_.empty(); }

    bool same_shape(const Cochain& o) const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;
    bool operator==(const Cochain& o) const;
    bool operator!=(const Cochain& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void validate(const CochainKey& key, ArrowId value_arrow) const;
    QuiverPtr quiver_;
    Level level_;
    int arity_;
    int degree_;
    std::map<CochainKey, LinComb> table_;
};

// Cochain of one total degree with components of several arities (the arity
// determines each component's internal degree).  Degree means the Hochschild
// degree at base level and the suspended degree at suspended level.
class MixedCochain {
  public:
    MixedCochain(QuiverPtr q, Level level, int degree)
        : quiver_(std::move(q)), level_(level), degree_(degree) {}
    explicit MixedCochain(const Cochain& single);

    const QuiverPtr& quiver() const { return quiver_; }
    Level level() const { return level_; }
    int degree() const { return degree_; }
    int hochschild_degree() const { return level_ == Level::Base ? degree_ : degree_ + 1; }
    const std::map<int, Cochain>& parts() const { return parts_; }
    const Cochain* part(int arity) const;
    Cochain part_or_zero(int arity) const;
    void add_part(const Cochain& c);  // merges with an existing component of the same arity
    bool is_zero() const;
    int max_arity() const;

    MixedCochain operator+(const MixedCochain& o) const;
    MixedCochain operator-(const MixedCochain& o) const;
    MixedCochain scaled(const Scalar& c) const;
    bool operator==(const MixedCochain& o) const;
    bool operator!=(const MixedCochain& o) const { return !(*this == o); }
    std::string str() const;

  private:
    QuiverPtr quiver_;
    Level level_;
    int degree_;
    std::map<int, Cochain> parts_;
};

// The identification of a cochain with its suspended form, entry by entry; the
// sign is suspension_sign on the argument degrees.  The two maps are mutually
// inverse (the sign is its own inverse on each entry).
Cochain suspend(const Cochain& c);
Cochain unsuspend(const Cochain& c);
MixedCochain suspend(const MixedCochain& c);
MixedCochain unsuspend(const MixedCochain& c);

// Deterministic enumeration of the basis of the cochain component with the
// given arity and internal degree: pairs (key, value arrow) in lexicographic
// order.  Used to bridge cochains and exact linear algebra.
class CochainBasis {
  public:
    CochainBasis(QuiverPtr q, int arity, int internal_degree);
    int dimension() const { return static_cast<int>(elements_.size()); }
    const std::pair<CochainKey, ArrowId>& element(int idx) const { return elements_.at(idx); }
    Vec coordinates(const Cochain& c) const;
    Cochain from_coordinates(const Vec& v) const;
    int arity() const { return arity_; }
    int internal_degree() const { return degree_; }
    const QuiverPtr& quiver() const { return quiver_; }

  private:
    QuiverPtr quiver_;
    int arity_;
    int degree_;
    std::vector<std::pair<CochainKey, ArrowId>> elements_;
};

// All object paths A_0..A_n with nonempty hom spaces along the way.
std::vector<std::vector<ObjId>> enumerate_paths(const GradedQuiver& q, int arity);

// Seeded random cochain with coefficients drawn from the field (small
// numerators over Q, uniform residues over GF(p)).  Caps very large components
// to a bounded number of randomly chosen entries.
Cochain random_cochain(QuiverPtr q, int arity, int internal_degree, std::mt19937_64& rng,
                       int max_entries = 64);
Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng);

}  // namespace embrace
