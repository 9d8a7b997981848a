// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace specgap {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Int parse_int(std::string_view text) {
    std::string s(text);
    bool neg = false;
    std::string_view body = text;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) fail(Errc::validation, "not an integer: '" + s + "'");
    Int v(std::string(body), 10);
    return neg ? Int(-v) : v;
}

Rat parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (sign_of(den) == 0) fail(Errc::validation, "zero denominator in '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    // Decimal form: [sign] digits [. digits] [e/E [sign] digits]
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string digits;
    long frac_places = 0;
    long exp10 = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_places;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            long e = 0;
            bool eneg = false;
            ++i;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
            if (i >= s.size()) fail(Errc::validation, "bad exponent in '" + s + "'");
            for (; i < s.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    fail(Errc::validation, "bad exponent in '" + s + "'");
                e = e * 10 + (s[i] - '0');
                if (e > 1000000) fail(Errc::validation, "exponent too large in '" + s + "'");
            }
            exp10 = eneg ? -e : e;
            break;
        } else {
            fail(Errc::validation, "not a rational: '" + s + "'");
        }
    }
    if (!seen_digit) fail(Errc::validation, "not a rational: '" + s + "'");

    Int num(digits.empty() ? "0" : digits, 10);
    long shift = exp10 - frac_places;
    Rat r;
    if (shift >= 0) {
        r = Rat(num * pow10(static_cast<unsigned long>(shift)), 1);
    } else {
        r = Rat(num, pow10(static_cast<unsigned long>(-shift)));
    }
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace specgap
