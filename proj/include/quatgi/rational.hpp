#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace quatgi {

/// Arbitrary-precision rational, canonical (lowest terms, positive denominator) after
/// every operation.
using rational = boost::multiprecision::mpq_rational;
using integer = boost::multiprecision::mpz_int;

inline std::string to_string(const rational& r) { return r.str(); }

/// Renders r as a terminating decimal ("9.5"); nullopt when the expansion does not
/// terminate.
inline std::optional<std::string> to_decimal_string(const rational& r) {
    integer num = boost::multiprecision::numerator(r);
    integer den = boost::multiprecision::denominator(r);
    std::size_t twos = 0;
    std::size_t fives = 0;
    integer rest = den;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return std::nullopt;
    const std::size_t digits = twos > fives ? twos : fives;
    if (digits == 0) return num.str();

    const bool negative = num < 0;
    if (negative) num = -num;
    integer scale = 1;
    for (std::size_t d = 0; d < digits; ++d) scale *= 10;
    const integer scaled = num * (scale / den);
    std::string body = scaled.str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return negative ? "-" + body : body;
}

/// Parses an unsigned rational literal at the start of `text`: digits, "p/q" or a
/// decimal "d.ddd". Returns the number of characters consumed (0 if none).
inline std::size_t parse_unsigned_rational(std::string_view text, rational& out) {
    auto digits_at = [&](std::size_t pos) {
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        return end;
    };
    std::size_t end = digits_at(0);
    if (end == 0) return 0;
    integer whole(std::string(text.substr(0, end)));

    if (end < text.size() && text[end] == '/') {
        const std::size_t den_end = digits_at(end + 1);
        if (den_end == end + 1) return 0;
        integer den(std::string(text.substr(end + 1, den_end - end - 1)));
        if (den == 0) return 0;
        out = rational(whole, den);
        return den_end;
    }
    if (end < text.size() && text[end] == '.') {
        const std::size_t frac_end = digits_at(end + 1);
        if (frac_end == end + 1) return 0;
        const std::string frac(text.substr(end + 1, frac_end - end - 1));
        integer scale = 1;
        for (std::size_t d = 0; d < frac.size(); ++d) scale *= 10;
        out = rational(whole * scale + integer(frac), scale);
        return frac_end;
    }
    out = rational(whole);
    return end;
}

/// Parses a complete signed rational ("-19/2", "9.5", "+3"); nullopt on any garbage.
inline std::optional<rational> parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    rational value;
    const std::size_t used = parse_unsigned_rational(text, value);
    if (used == 0 || used != text.size()) return std::nullopt;
    return negative ? rational(-value) : value;
}

}  // namespace quatgi
