#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "actionwin/rational.hpp"

namespace actionwin {

/// Coefficient field: F2, F_p for a prime p, or Q.
class FieldSpec {
public:
    enum class Kind : std::uint8_t { F2, Fp, Q };

    /// F2 by default.
    FieldSpec() = default;

    static FieldSpec f2() { return FieldSpec(Kind::F2, 2); }
    /// Throws Error(InvalidField) unless p is prime; fp(2) is f2().
    static FieldSpec fp(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec(Kind::Q, 0); }

    /// "F2", "F5", "Q".
    static FieldSpec parse(std::string_view tag);

    Kind kind() const noexcept { return kind_; }
    /// 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_prime_field() const noexcept { return kind_ != Kind::Q; }
    std::string tag() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::F2;
    std::uint32_t p_ = 2;
};

bool is_prime(std::uint64_t n);

/// Exact field element. The representation is canonical: a residue in
/// [0, p) for prime fields, a reduced fraction with positive denominator
/// for Q, so equality of values is equality of representations.
class Scalar {
public:
    /// Zero of F2.
    Scalar() = default;
    Scalar(const FieldSpec& field, long value);
    /// For prime fields the denominator must be invertible mod p.
    Scalar(const FieldSpec& field, const Rational& value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }
    /// Reads "3", "-2", "3/4" into the field.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue for prime fields; throws std::logic_error for Q.
    std::int64_t residue() const;
    /// Exact value as a rational (the residue itself for prime fields).
    Rational to_rational() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws Error(DivisionByZero) on zero.
    Scalar inv() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    std::variant<std::int64_t, Rational> value_{std::int64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace actionwin
