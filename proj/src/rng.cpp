#include "combilang/rng.hpp"

#include <limits>
#include <stdexcept>

namespace combilang {

std::uint64_t Rng::uniform_below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection on the largest multiple of bound.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x < limit)
            return x % bound;
    }
}

BigInt Rng::uniform_below(const BigInt& bound)
{
    if (bound <= 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound <= std::numeric_limits<std::uint64_t>::max())
        return BigInt(uniform_below(bound.convert_to<std::uint64_t>()));

    // Draw msb+1 bits, reject values >= bound (acceptance probability > 1/2).
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned excess = words * 64 - bits;
    for (;;) {
        BigInt x = 0;
        for (unsigned w = 0; w < words; ++w) {
            x <<= 64;
            x |= next();
        }
        x >>= excess;
        if (x < bound)
            return x;
    }
}

} // namespace combilang
