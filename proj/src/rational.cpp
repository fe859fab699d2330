#include "walkmetric/rational.hpp"

#include <algorithm>
#include <cctype>

#include "walkmetric/errors.hpp"

namespace walkmetric {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("invalid rational: '" + std::string(whole) + "'");
    Integer value(std::string(s));
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        std::string_view den_part = s.substr(slash + 1);
        if (!den_part.empty() && den_part.front() == '-')
            throw ParseError("invalid rational: '" + std::string(text) + "' (negate the numerator)");
        Integer den = parse_integer(den_part, text);
        if (den == 0) throw ParseError("invalid rational: '" + std::string(text) + "' (zero denominator)");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '+' || int_part.front() == '-')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if (int_part.empty() && frac_part.empty())
            throw ParseError("invalid rational: '" + std::string(text) + "'");
        if (!int_part.empty() && !all_digits(int_part))
            throw ParseError("invalid rational: '" + std::string(text) + "'");
        if (!frac_part.empty() && !all_digits(frac_part))
            throw ParseError("invalid rational: '" + std::string(text) + "'");
        Integer scale = 1;
        Integer digits = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
        for (char c : frac_part) {
            digits = digits * 10 + (c - '0');
            scale *= 10;
        }
        Rational value(digits, scale);
        return negative ? Rational(-value) : value;
    }

    return Rational(parse_integer(s, text));
}

Rational rational_pow(const Rational& r, std::size_t n) {
    if (n == 0) return Rational(1);
    // Numerator and denominator are coprime, so their powers are too.
    Integer num = pow(numerator(r), static_cast<unsigned>(n));
    Integer den = pow(denominator(r), static_cast<unsigned>(n));
    return Rational(num, den);
}

std::string fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, unsigned decimals) {
    const bool negative = r < 0;
    const Rational magnitude = negative ? Rational(-r) : r;
    const Integer scale = pow(Integer(10), decimals);
    const Integer num = numerator(magnitude) * scale;
    const Integer den = denominator(magnitude);
    Integer q = num / den;
    const Integer twice_rem = (num % den) * 2;
    if (twice_rem > den || (twice_rem == den && q % 2 != 0)) ++q;

    std::string digits = q.str();
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string out;
    if (negative && q != 0) out = "-";
    if (decimals == 0) return out + digits;
    out += digits.substr(0, digits.size() - decimals);
    out += '.';
    out += digits.substr(digits.size() - decimals);
    return out;
}

}  // namespace walkmetric
