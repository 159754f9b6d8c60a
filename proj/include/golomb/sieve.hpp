#pragma once
#include <bit>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "golomb/base.hpp"

namespace golomb {

// Segment length used by the streaming drivers: 2^20 odd residues per
// segment (a 2^21-wide window), sized so the bit map stays in cache.
inline constexpr u64 kSegmentOddBits = u64{1} << 20;
inline constexpr u64 kSegmentSpan = kSegmentOddBits * 2;

// All primes <= limit, plain sieve of Eratosthenes.
inline std::vector<u64> simple_sieve(u64 limit)
{
    std::vector<u64> primes;
    if (limit < 2)
        return primes;
    std::vector<char> mark(limit + 1, 1);
    mark[0] = mark[1] = 0;
    for (u64 i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (u64 j = i * i; j <= limit; j += i)
                mark[j] = 0;
    for (u64 i = 2; i <= limit; ++i)
        if (mark[i])
            primes.push_back(i);
    return primes;
}

// Bit-packed primality over [lo, hi): one bit per odd integer, set = prime.
// 2 is answered specially; 1 and even numbers are never marked.
class SieveSegment {
public:
    SieveSegment(u64 lo, u64 hi, std::vector<u64> flags)
        : lo_(lo), hi_(hi), first_odd_(lo | 1), flags_(std::move(flags))
    {
        assert(lo_ < hi_);
    }

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

    bool is_prime(u64 n) const
    {
        assert(n >= lo_ && n < hi_);
        if ((n & 1) == 0)
            return n == 2;
        if (n == 1)
            return false;
        u64 i = (n - first_odd_) / 2;
        return (flags_[i >> 6] >> (i & 63)) & 1;
    }

    u64 count() const
    {
        u64 c = (lo_ <= 2 && 2 < hi_) ? 1 : 0;
        for (u64 w : flags_)
            c += std::popcount(w);
        return c;
    }

    template <class F>
    void for_each_prime(F&& f) const
    {
        if (lo_ <= 2 && 2 < hi_)
            f(u64{2});
        for (u64 w = 0; w < flags_.size(); ++w) {
            u64 bits = flags_[w];
            while (bits) {
                unsigned b = std::countr_zero(bits);
                bits &= bits - 1;
                f(first_odd_ + 2 * (w * 64 + b));
            }
        }
    }

private:
    u64 lo_, hi_, first_odd_;
    std::vector<u64> flags_;
};

namespace detail {

// A prime in (largest_base, s] means the base list cannot cover s. Trial
// division by the supplied base primes is enough to detect one: a true prime
// has no divisors at all, so it is found regardless of what the list holds.
inline void require_base_primes(const std::vector<u64>& base_primes, u64 s)
{
    if (s < 2)
        return;
    u64 largest = base_primes.empty() ? 1 : base_primes.back();
    for (u64 c = largest + 1; c <= s; ++c) {
        bool divisible = false;
        for (u64 p : base_primes) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                divisible = true;
                break;
            }
        }
        if (!divisible && c >= 2)
            throw std::invalid_argument("insufficient base primes for sieve segment");
    }
}

} // namespace detail

// Sieves [lo, hi). base_primes must be sorted and contain every prime <= sqrt(hi-1).
inline SieveSegment sieve_segment(u64 lo, u64 hi, const std::vector<u64>& base_primes)
{
    if (lo >= hi)
        throw std::invalid_argument("sieve_segment: invalid interval (lo >= hi)");
    u64 s = isqrt(hi - 1);
    detail::require_base_primes(base_primes, s);

    u64 first_odd = lo | 1;
    u64 odd_count = first_odd < hi ? (hi - first_odd + 1) / 2 : 0;
    std::vector<u64> flags((odd_count + 63) / 64, ~u64{0});
    if (odd_count % 64 != 0 && !flags.empty())
        flags.back() = (u64{1} << (odd_count % 64)) - 1;

    auto clear_bit = [&](u64 n) {
        u64 i = (n - first_odd) / 2;
        flags[i >> 6] &= ~(u64{1} << (i & 63));
    };

    for (u64 p : base_primes) {
        if (p == 2)
            continue;
        if (p > s)
            break;
        // first odd multiple of p in [max(lo, p^2), hi)
        u64 start = p * p; // p <= sqrt(hi-1), no overflow
        if (start < lo) {
            u64 q = ceil_div(lo, p);
            start = checked_mul(q, p);
        }
        if ((start & 1) == 0) {
            start = checked_add(start, p);
        }
        u64 step = 2 * p;
        for (u64 m = start; m < hi;) {
            clear_bit(m);
            if (step >= hi - m)
                break;
            m += step;
        }
    }

    if (first_odd == 1 && odd_count > 0)
        flags[0] &= ~u64{1};

    return SieveSegment(lo, hi, std::move(flags));
}

} // namespace golomb
