// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace specgap {

/// Counter-based deterministic generator: SplitMix64 applied to
/// seed + (counter+1) * golden gamma. Identical output on every platform,
/// random access by index, cheap substream derivation.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return mix(seed_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t next() { return at(counter_++); }

    /// Uniform in [0,1) with 53 random mantissa bits.
    double uniform53() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent substream for e.g. one Monte Carlo trial.
    CounterRng substream(std::uint64_t stream) const { return CounterRng(mix(seed_ ^ mix(stream))); }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace specgap
