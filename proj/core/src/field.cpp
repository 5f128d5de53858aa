#include "embrace/field.hpp"

#include <sstream>

namespace embrace {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
    return kind == Kind::Rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
    Scalar s;
    s.spec_ = f;
    if (f.kind == FieldSpec::Kind::Rational) {
        s.q_ = Rational(n);
    } else {
        long long r = n % static_cast<long long>(f.p);
        if (r < 0) r += f.p;
        s.r_ = static_cast<std::uint32_t>(r);
    }
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint32_t r) {
    if (f.kind != FieldSpec::Kind::Prime) throw std::logic_error("from_residue needs a prime field");
    Scalar s;
    s.spec_ = f;
    s.r_ = r % f.p;
    return s;
}

bool Scalar::is_zero() const {
    return spec_.kind == FieldSpec::Kind::Rational ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return spec_.kind == FieldSpec::Kind::Rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (spec_ != o.spec_) throw std::logic_error("scalar field mismatch: " + spec_.str() + " vs " + o.spec_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (spec_.kind == FieldSpec::Kind::Rational)
        s.q_ += o.q_;
    else
        s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % spec_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (spec_.kind == FieldSpec::Kind::Rational)
        s.q_ *= o.q_;
    else
        s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % spec_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (spec_.kind == FieldSpec::Kind::Rational)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : spec_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + spec_.str());
    Scalar s = *this;
    if (spec_.kind == FieldSpec::Kind::Rational)
        s.q_ = Rational(1) / q_;
    else
        s.r_ = mod_pow(r_, spec_.p - 2, spec_.p);  // Fermat: p prime
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return spec_.kind == FieldSpec::Kind::Rational ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return spec_.kind == FieldSpec::Kind::Rational ? q_ < o.q_ : r_ < o.r_;
}

const Rational& Scalar::rational_value() const {
    if (spec_.kind != FieldSpec::Kind::Rational) throw std::logic_error("not a rational scalar");
    return q_;
}

std::uint32_t Scalar::residue_value() const {
    if (spec_.kind != FieldSpec::Kind::Prime) throw std::logic_error("not a prime-field scalar");
    return r_;
}

std::string Scalar::str() const {
    if (spec_.kind == FieldSpec::Kind::Rational) {
        std::ostringstream out;
        out << q_.str();
        return out.str();
    }
    return std::to_string(r_) + " mod " + std::to_string(spec_.p);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("cannot parse scalar '" + text + "' for " + f.str() + ": " + why);
    };
    std::string body = text;
    auto mod_at = text.find(" mod ");
    if (mod_at != std::string::npos) {
        if (f.kind != FieldSpec::Kind::Prime) throw bad("modular literal in a rational field");
        std::uint32_t p = 0;
        try {
            p = static_cast<std::uint32_t>(std::stoul(text.substr(mod_at + 5)));
        } catch (const std::exception&) {
            throw bad("bad modulus");
        }
        if (p != f.p) throw bad("modulus does not match field");
        body = text.substr(0, mod_at);
    }
    try {
        if (f.kind == FieldSpec::Kind::Rational) return from_rational(Rational(body));
        auto slash = body.find('/');
        if (slash != std::string::npos) {
            Scalar num = from_int(f, std::stoll(body.substr(0, slash)));
            Scalar den = from_int(f, std::stoll(body.substr(slash + 1)));
            return num / den;
        }
        return from_int(f, std::stoll(body));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad("malformed number");
    }
}

}  // namespace embrace
