#pragma once

#include <cstdint>
#include <random>

#include "combilang/exact.hpp"

namespace combilang {

/// Seeded random stream shared by every sampling routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded integers and doubles are derived here (not through
/// std::uniform_*_distribution, whose algorithms are implementation-defined)
/// so that a given seed yields identical results on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform exact integer in [0, bound); bound must be positive.
    BigInt uniform_below(const BigInt& bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace combilang
