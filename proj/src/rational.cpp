#include "actionwin/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "actionwin/error.hpp"

namespace actionwin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational ratio(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        out = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            bad_number(text);
        }
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class n(digits.empty() ? std::string("0") : digits, 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        out = Rational(n, d);
    } else {
        if (!all_digits(s)) bad_number(text);
        out = Rational(mpz_class(std::string(s), 10));
    }
    out.canonicalize();
    if (negative) out = -out;
    return out;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

const Rational& Action::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("Action::value() on an infinite action");
    return value_;
}

std::strong_ordering Action::operator<=>(const Action& other) const {
    if (kind_ != other.kind_) {
        return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
    }
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    int c = cmp(value_, other.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Action& value) {
    switch (value.kind()) {
        case Action::Kind::NegInf: return "-inf";
        case Action::Kind::PosInf: return "inf";
        case Action::Kind::Finite: break;
    }
    return to_string(value.value());
}

Action parse_action(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "inf" || s == "+inf" || s == "infinity") return Action::pos_inf();
    if (s == "-inf" || s == "-infinity") return Action::neg_inf();
    return Action(parse_rational(s));
}

Action difference(const Action& a, const Action& b) {
    if (a.is_pos_inf()) return Action::pos_inf();
    if (!a.is_finite() || !b.is_finite()) {
        throw std::logic_error("difference() needs a finite subtrahend and minuend");
    }
    return Action(Rational(a.value() - b.value()));
}

std::ostream& operator<<(std::ostream& os, const Action& value) {
    return os << to_string(value);
}

}  // namespace actionwin
