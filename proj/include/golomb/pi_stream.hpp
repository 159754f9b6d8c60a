#pragma once
#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "golomb/base.hpp"
#include "golomb/checkpoint.hpp"
#include "golomb/sieve.hpp"

namespace golomb {

namespace detail {

template <class Visitor>
bool visit_checkpoint(Visitor& visit, PiCheckpoint cp)
{
    if constexpr (std::is_void_v<std::invoke_result_t<Visitor&, PiCheckpoint>>) {
        visit(cp);
        return true;
    } else {
        return visit(cp);
    }
}

} // namespace detail

// Emits a checkpoint (n, pi(n)) for every n in (start.n, limit], in order.
// The visitor may return void, or bool with false meaning stop early.
// start.count must equal pi(start.n); the caller owns that guarantee.
template <class Visitor>
void pi_stream(PiCheckpoint start, u64 limit, Visitor&& visit,
               u64 segment_span = kSegmentSpan)
{
    if (limit < start.n)
        throw std::invalid_argument("pi_stream: limit below start checkpoint");
    if (limit == start.n)
        return;
    if (limit == ~u64{0})
        throw std::invalid_argument("pi_stream: limit exceeds supported range");
    if (segment_span < 2)
        throw std::invalid_argument("pi_stream: segment span too small");

    std::vector<u64> base = simple_sieve(isqrt(limit));
    u64 count = start.count;
    u64 lo = start.n + 1;
    while (lo <= limit) {
        u64 hi = lo + std::min(segment_span, limit - lo + 1);
        SieveSegment seg = sieve_segment(lo, hi, base);
        for (u64 n = lo; n < hi; ++n) {
            count += seg.is_prime(n);
            if (!detail::visit_checkpoint(visit, PiCheckpoint{n, count}))
                return;
        }
        lo = hi;
    }
}

// Collects the full stream; intended for small ranges.
inline std::vector<PiCheckpoint> pi_stream_collect(PiCheckpoint start, u64 limit)
{
    std::vector<PiCheckpoint> out;
    if (limit > start.n)
        out.reserve(limit - start.n);
    pi_stream(start, limit, [&](PiCheckpoint cp) { out.push_back(cp); });
    return out;
}

} // namespace golomb
