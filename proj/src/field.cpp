#include "actionwin/field.hpp"

#include <charconv>
#include <utility>
#include <ostream>
#include <stdexcept>

#include "actionwin/error.hpp"

namespace actionwin {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::fp(std::uint32_t p) {
    if (p > (1u << 31) || !is_prime(p)) {
        throw Error(ErrorCode::InvalidField, "F" + std::to_string(p) + " is not a prime field");
    }
    if (p == 2) return f2();
    return FieldSpec(Kind::Fp, p);
}

FieldSpec FieldSpec::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.size() >= 2 && tag.front() == 'F') {
        std::uint32_t p = 0;
        auto digits = tag.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return fp(p);
    }
    throw Error(ErrorCode::InvalidField, "unknown field tag '" + std::string(tag) + "'");
}

std::string FieldSpec::tag() const {
    if (kind_ == Kind::Q) return "Q";
    return "F" + std::to_string(p_);
}

namespace {

std::int64_t reduce(long value, std::uint32_t p) {
    auto m = static_cast<std::int64_t>(value) % static_cast<std::int64_t>(p);
    return m < 0 ? m + p : m;
}

std::int64_t reduce(const mpz_class& value, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    // a != 0 mod p and p prime: extended Euclid.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
    if (field.kind() == FieldSpec::Kind::Q) {
        value_ = Rational(value);
    } else {
        value_ = reduce(value, field.characteristic());
    }
}

Scalar::Scalar(const FieldSpec& field, const Rational& input) : field_(field) {
    Rational value = input;
    value.canonicalize();
    if (field.kind() == FieldSpec::Kind::Q) {
        value_ = value;
        return;
    }
    const auto p = field.characteristic();
    auto num = reduce(value.get_num(), p);
    auto den = reduce(value.get_den(), p);
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero,
                    actionwin::to_string(value) + " has denominator divisible by " + std::to_string(p));
    }
    value_ = num * inverse_mod(den, p) % p;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    return Scalar(field, parse_rational(text));
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 0;
    return sgn(std::get<Rational>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 1;
    return std::get<Rational>(value_) == 1;
}

std::int64_t Scalar::residue() const {
    if (auto r = std::get_if<std::int64_t>(&value_)) return *r;
    throw std::logic_error("Scalar::residue() on a rational scalar");
}

Rational Scalar::to_rational() const {
    if (auto r = std::get_if<std::int64_t>(&value_)) return Rational(static_cast<long>(*r));
    return std::get<Rational>(value_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw Error(ErrorCode::FieldMismatch, "cannot combine scalars over " + field_.tag() + " and " +
                                                  rhs.field_.tag());
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar out;
    out.field_ = field_;
    if (field_.kind() == FieldSpec::Kind::Q) {
        out.value_ = Rational(std::get<Rational>(value_) + std::get<Rational>(rhs.value_));
    } else {
        auto s = std::get<std::int64_t>(value_) + std::get<std::int64_t>(rhs.value_);
        out.value_ = s >= field_.characteristic() ? s - field_.characteristic() : s;
    }
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.field_ = field_;
    if (field_.kind() == FieldSpec::Kind::Q) {
        out.value_ = Rational(-std::get<Rational>(value_));
    } else {
        auto r = std::get<std::int64_t>(value_);
        out.value_ = r == 0 ? std::int64_t{0} : field_.characteristic() - r;
    }
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return *this + (-rhs);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar out;
    out.field_ = field_;
    if (field_.kind() == FieldSpec::Kind::Q) {
        out.value_ = Rational(std::get<Rational>(value_) * std::get<Rational>(rhs.value_));
    } else {
        out.value_ = std::get<std::int64_t>(value_) * std::get<std::int64_t>(rhs.value_) %
                     static_cast<std::int64_t>(field_.characteristic());
    }
    return out;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.tag());
    Scalar out;
    out.field_ = field_;
    if (field_.kind() == FieldSpec::Kind::Q) {
        out.value_ = Rational(1 / std::get<Rational>(value_));
    } else {
        out.value_ = inverse_mod(std::get<std::int64_t>(value_), field_.characteristic());
    }
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inv();
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) return false;
    return value_ == rhs.value_;
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<std::int64_t>(&value_)) return std::to_string(*r);
    return actionwin::to_string(std::get<Rational>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
    return os << value.to_string();
}

}  // namespace actionwin
