#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include "seqwht/error.hpp"

namespace seqwht::bits {

constexpr bool is_pow2(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

// log2 of an exact power of two; throws SizingError otherwise.
inline unsigned log2_exact(std::size_t n, const char* what = "length") {
    if (!is_pow2(n)) {
        throw SizingError(std::string(what) + " " + std::to_string(n) +
                          " is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(n));
}

constexpr unsigned bit(std::uint64_t v, unsigned i) noexcept {
    return static_cast<unsigned>((v >> i) & 1u);
}

// Bit-wise dot product mod 2.
constexpr unsigned dot(std::uint64_t a, std::uint64_t b) noexcept {
    return static_cast<unsigned>(std::popcount(a & b) & 1);
}

}  // namespace seqwht::bits
