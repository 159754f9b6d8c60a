#pragma once
#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace golomb {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// ceil(x/y) for positive integers
inline u64 ceil_div(u64 x, u64 y)
{
    return x / y + (x % y > 0);
}

// exact floor(sqrt(n)) with fixup for double rounding near 2^52+
inline u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline u64 checked_add(u64 a, u64 b)
{
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit addition overflow");
    return r;
}

inline u64 checked_mul(u64 a, u64 b)
{
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

} // namespace golomb
