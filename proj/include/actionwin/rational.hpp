#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace actionwin {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// num / den in lowest terms (mpq_class(num, den) does not reduce). Throws
/// Error(DivisionByZero) when den == 0.
Rational ratio(long num, long den);

/// Parses "3", "-3/4" or a terminating decimal such as "1.05" (read exactly
/// as 21/20). Throws Error(ParseError) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3", "-3/4".
std::string to_string(const Rational& value);

/// An action level on the extended line: a finite rational or one of the
/// two infinities. Generators always carry finite actions; +inf appears as
/// a bar endpoint or window bound and -inf as the action of the zero chain.
class Action {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Action() = default;  // finite zero
    Action(Rational value) : kind_(Kind::Finite), value_(std::move(value)) { value_.canonicalize(); }
    Action(long value) : kind_(Kind::Finite), value_(value) {}
    Action(int value) : kind_(Kind::Finite), value_(value) {}

    static Action pos_inf() { return Action(Kind::PosInf); }
    static Action neg_inf() { return Action(Kind::NegInf); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

    /// Finite value; throws std::logic_error for the infinities.
    const Rational& value() const;

    std::strong_ordering operator<=>(const Action& other) const;
    bool operator==(const Action& other) const { return (*this <=> other) == 0; }

private:
    explicit Action(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    Rational value_{0};
};

/// "inf", "-inf" or the canonical rational form.
std::string to_string(const Action& value);

/// Accepts everything parse_rational does plus "inf", "+inf", "-inf".
Action parse_action(std::string_view text);

/// a - b for finite a; +inf if a is +inf. Used for bar lengths.
Action difference(const Action& a, const Action& b);

std::ostream& operator<<(std::ostream& os, const Action& value);

}  // namespace actionwin
