#pragma once

#include "errors.hpp"
#include "matrix.hpp"
#include "quaternion.hpp"
#include "rational.hpp"

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace quatgi {

struct format_options {
    /// Print terminating decimals ("9.5") where exact; other values stay p/q.
    bool decimal = false;
};

namespace detail {

inline std::string render_magnitude(const rational& v, const format_options& opt) {
    if (opt.decimal)
        if (auto s = to_decimal_string(v)) return *s;
    return to_string(v);
}

}  // namespace detail

/// "a0 + a1i + a2j + a3k" with zero terms omitted, unit coefficients as bare "i",
/// non-integer coefficients of units parenthesised: "1/2 - (3/4)k". Zero prints "0".
inline std::string to_string(const quaternion& q, const format_options& opt = {}) {
    const rational* parts[4] = {&q.real(), &q.i_part(), &q.j_part(), &q.k_part()};
    const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int t = 0; t < 4; ++t) {
        const rational& c = *parts[t];
        if (c == 0) continue;
        const bool negative = c < 0;
        const rational mag = negative ? rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string body = detail::render_magnitude(mag, opt);
        if (t > 0) {
            if (mag == 1)
                body.clear();
            else if (body.find('/') != std::string::npos)
                body = "(" + body + ")";
        }
        out += body;
        out += units[t];
    }
    return out.empty() ? "0" : out;
}

/// Parses one quaternion literal: a signed sum of terms, each an optional rational
/// coefficient (digits, p/q or decimal, optionally parenthesised or followed by '*')
/// and an optional unit i, j or k. Errors report `line` and the 1-based column offset by
/// `column_base`.
inline quaternion parse_quaternion(std::string_view text, std::size_t line = 1, std::size_t column_base = 1) {
    rational parts[4] = {0, 0, 0, 0};
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> quaternion { throw parse_error(what, line, column_base + pos); };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_ws();
    if (pos == text.size()) return fail("empty quaternion literal");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            return fail("expected '+' or '-' between terms");
        }
        first = false;

        rational coef(1);
        bool have_coef = false;
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            skip_ws();
            bool inner_negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                inner_negative = text[pos] == '-';
                ++pos;
            }
            const std::size_t used = parse_unsigned_rational(text.substr(pos), coef);
            if (used == 0) return fail("expected a number after '('");
            pos += used;
            skip_ws();
            if (pos == text.size() || text[pos] != ')') return fail("expected ')'");
            ++pos;
            if (inner_negative) coef = -coef;
            have_coef = true;
        } else {
            const std::size_t used = parse_unsigned_rational(text.substr(pos), coef);
            if (used > 0) {
                pos += used;
                have_coef = true;
            }
        }
        skip_ws();
        if (have_coef && pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        int unit = 0;
        if (pos < text.size()) {
            const char c = text[pos];
            if (c == 'i' || c == 'j' || c == 'k') {
                unit = c == 'i' ? 1 : (c == 'j' ? 2 : 3);
                ++pos;
                if (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
                    return fail("unexpected character after unit");
            }
        }
        if (!have_coef && unit == 0) return fail("expected a number or one of i, j, k");
        parts[unit] += negative ? rational(-coef) : coef;
    }
    return quaternion(parts[0], parts[1], parts[2], parts[3]);
}

/// Matrix text format: a line "m n", then m lines of n quaternion literals separated by
/// ';'. Blank lines and lines starting with '#' are ignored.
inline qmatrix read_matrix(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++line_no;
            std::size_t first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos || raw[first] == '#') continue;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            out = raw;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw parse_error("missing \"m n\" header", line_no + 1, 1);
    std::istringstream hs(header);
    long long m = -1;
    long long n = -1;
    std::string extra;
    if (!(hs >> m >> n) || m < 0 || n < 0 || (hs >> extra)) throw parse_error("header must be \"m n\"", line_no, 1);

    qmatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.rows(); ++i) {
        std::string row;
        if (!next_line(row))
            throw parse_error("expected " + std::to_string(m) + " rows, found " + std::to_string(i), line_no + 1, 1);
        std::size_t start = 0;
        std::size_t j = 0;
        while (true) {
            const std::size_t semi = row.find(';', start);
            const std::size_t end = semi == std::string::npos ? row.size() : semi;
            if (j >= out.cols()) throw parse_error("too many entries in row", line_no, start + 1);
            out(i, j) = parse_quaternion(std::string_view(row).substr(start, end - start), line_no, start + 1);
            ++j;
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (j != out.cols())
            throw parse_error("expected " + std::to_string(n) + " entries, found " + std::to_string(j), line_no, 1);
    }
    std::string trailing;
    if (next_line(trailing)) throw parse_error("unexpected content after the last row", line_no, 1);
    return out;
}

inline qmatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const qmatrix& m, const format_options& opt = {}) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << "; ";
            out << to_string(m(i, j), opt);
        }
        out << '\n';
    }
}

inline std::string to_string(const qmatrix& m, const format_options& opt = {}) {
    std::ostringstream out;
    write_matrix(out, m, opt);
    return out.str();
}

}  // namespace quatgi
