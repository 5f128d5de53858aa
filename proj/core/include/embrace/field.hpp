#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace embrace {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient field of a whole computation: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint32_t p = 0;  // modulus, only for Kind::Prime

    static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }
    static FieldSpec prime(std::uint32_t p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

// Exact field element: a reduced fraction or a residue mod p.  Elements carry
// their field; mixing fields in one operation is a logic error.
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rational()), q_(0), r_(0) {}
    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long long n);
    static Scalar from_rational(const Rational& q) {
        Scalar s;
        s.spec_ = FieldSpec::rational();
        s.q_ = q;
        return s;
    }
    static Scalar from_residue(const FieldSpec& f, std::uint32_t r);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order for deterministic containers; compares within one field only.
    bool operator<(const Scalar& o) const;

    const Rational& rational_value() const;
    std::uint32_t residue_value() const;

    // "3/4", "-2", or "3 mod 7"; parse accepts the same shapes (the modulus, if
    // present, must match the target field).
    std::string str() const;
    static Scalar parse(const FieldSpec& f, const std::string& text);

  private:
    void check_same_field(const Scalar& o) const;
    FieldSpec spec_;
    Rational q_;        // Kind::Rational payload (always normalized by cpp_rational)
    std::uint32_t r_;   // Kind::Prime payload, in [0, p)
};

}  // namespace embrace
