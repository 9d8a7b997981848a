// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "specgap/surd.hpp"

namespace specgap {

/// The spectral parameter. Two paths:
///  - exact:   a QuadSurd (possibly rational), every comparison decided exactly;
///  - literal: a decimal known only to +- half an ulp of its last digit, so
///             downstream comparisons either certify against the interval or
///             raise PrecisionExhausted.
///
/// Grammar: sqrt:p[/q] | surd:a,b,c,d | dec:<decimal digits> | golden2
class Alpha {
  public:
    Alpha() = default;  ///< exact zero; every operation validates positivity
    static Alpha parse(std::string_view text);
    static Alpha exact(QuadSurd s, std::string grammar = "");
    static Alpha literal(const Rat& value, const Rat& radius, std::string grammar = "");

    bool is_exact() const { return exact_; }
    const QuadSurd& surd() const;  ///< exact path only
    const Rat& value() const { return value_; }
    const Rat& radius() const { return radius_; }
    Rat lo() const { return value_ - radius_; }
    Rat hi() const { return value_ + radius_; }

    bool is_rational_exact() const { return exact_ && surd_.is_rational(); }
    int sign() const;
    const std::string& grammar() const { return grammar_; }

    /// 30-significant-digit rendering (exact path); literal echoes the value.
    std::string decimal(int sig_digits = 30) const;

  private:
    bool exact_ = true;
    QuadSurd surd_;
    Rat value_;   // literal path
    Rat radius_;  // literal path
    std::string grammar_;
};

}  // namespace specgap
