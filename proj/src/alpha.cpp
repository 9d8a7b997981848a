// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/alpha.hpp"

#include <cctype>
#include <vector>

namespace specgap {

Alpha Alpha::exact(QuadSurd s, std::string grammar) {
    Alpha a;
    a.exact_ = true;
    a.surd_ = std::move(s);
    if (grammar.empty()) grammar = a.surd_.str();
    a.grammar_ = std::move(grammar);
    return a;
}

Alpha Alpha::literal(const Rat& value, const Rat& radius, std::string grammar) {
    if (sign_of(radius) < 0) fail(Errc::validation, "negative literal radius");
    Alpha a;
    a.exact_ = false;
    a.value_ = value;
    a.radius_ = radius;
    a.grammar_ = std::move(grammar);
    return a;
}

const QuadSurd& Alpha::surd() const {
    if (!exact_) fail(Errc::validation, "operation requires the exact (surd) alpha path");
    return surd_;
}

int Alpha::sign() const {
    if (exact_) return surd_.sign();
    int slo = sign_of(Rat(value_ - radius_));
    int shi = sign_of(Rat(value_ + radius_));
    if (slo == shi) return slo;
    fail(Errc::precision_exhausted, "literal alpha sign uncertain");
}

std::string Alpha::decimal(int sig_digits) const {
    if (exact_) return surd_.decimal(sig_digits);
    return QuadSurd(value_).decimal(sig_digits);
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

}  // namespace

Alpha Alpha::parse(std::string_view text) {
    std::string t(text);
    if (t == "golden2") {
        return exact(QuadSurd(Int(3), Int(1), Int(2), Int(5)), t);
    }
    if (t.rfind("sqrt:", 0) == 0) {
        Rat r = parse_rational(t.substr(5));
        if (sign_of(r) <= 0) fail(Errc::validation, "sqrt argument must be positive");
        return exact(QuadSurd::sqrt_of(r), t);
    }
    if (t.rfind("surd:", 0) == 0) {
        auto parts = split(t.substr(5), ',');
        if (parts.size() != 4) fail(Errc::validation, "surd grammar is surd:a,b,c,d");
        return exact(QuadSurd(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])), t);
    }
    if (t.rfind("dec:", 0) == 0) {
        std::string body = t.substr(4);
        Rat v = parse_rational(body);
        // Radius: half an ulp of the last given digit.
        long places = 0;
        auto dot = body.find('.');
        if (dot != std::string::npos) {
            for (size_t i = dot + 1; i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])); ++i)
                ++places;
        }
        auto epos = body.find_first_of("eE");
        if (epos != std::string::npos) places -= std::stol(body.substr(epos + 1));
        Rat ulp = places >= 0 ? Rat(Int(1), 2 * pow10(static_cast<unsigned long>(places)))
                              : Rat(pow10(static_cast<unsigned long>(-places)), Int(2));
        ulp.canonicalize();
        return literal(v, ulp, t);
    }
    fail(Errc::validation, "unrecognized alpha grammar: '" + t + "' (want sqrt:p/q, surd:a,b,c,d, dec:..., golden2)");
}

}  // namespace specgap
