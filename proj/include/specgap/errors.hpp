// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

/// Error taxonomy shared by the library, the C API and the CLI exit codes.
enum class Errc {
    validation,
    rational_alpha,
    precision_exhausted,
    factorization_timeout,
    mixed_radicands,
    division_by_zero,
    pool_exhausted,
    memory_bound,
    divisibility_violation,
    degenerate_divisor,
    odd_index_required,
    square_d,
    invalid_spec,
    usage,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::validation: return "Validation";
        case Errc::rational_alpha: return "RationalAlpha";
        case Errc::precision_exhausted: return "PrecisionExhausted";
        case Errc::factorization_timeout: return "FactorizationTimeout";
        case Errc::mixed_radicands: return "MixedRadicands";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::pool_exhausted: return "PoolExhausted";
        case Errc::memory_bound: return "MemoryBound";
        case Errc::divisibility_violation: return "DivisibilityViolation";
        case Errc::degenerate_divisor: return "DegenerateDivisor";
        case Errc::odd_index_required: return "OddIndexRequired";
        case Errc::square_d: return "SquareD";
        case Errc::invalid_spec: return "InvalidSpec";
        case Errc::usage: return "Usage";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace specgap
