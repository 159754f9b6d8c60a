#pragma once
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "golomb/base.hpp"
#include "golomb/checkpoint.hpp"
#include "golomb/formula.hpp"
#include "golomb/legendre.hpp"
#include "golomb/pi_stream.hpp"
#include "golomb/sieve.hpp"
#include "golomb/thresholds.hpp"

namespace golomb {

struct ScanOptions {
    unsigned jobs = 1; // worker pool size; also the default shard count
    u64 shards = 0;    // 0 = same as jobs
    u64 segment_span = kSegmentSpan; // checkpoint granularity
    std::function<void(const PiCheckpoint&)> on_checkpoint; // fired in ascending order
};

struct Theorem3Failure {
    u64 n = 0;
    u64 pi_n = 0;                   // the true count, i.e. the expected value
    std::optional<u64> formula_val; // empty when the floor does not divide n

    friend bool operator==(const Theorem3Failure&, const Theorem3Failure&) = default;
};

struct VerificationReport {
    u64 range_lo = 0; // half-open [range_lo, range_hi)
    u64 range_hi = 0;
    std::vector<GolombPoint> points;
    u64 checked = 0; // points with n >= 67
    std::vector<Theorem3Failure> failures;
    std::vector<u64> bounds_violations;
    std::chrono::duration<double> elapsed{};
    PiCheckpoint checkpoint{}; // final position: (range_hi - 1, pi(range_hi - 1))
};

namespace detail {

struct ShardOutcome {
    std::vector<GolombPoint> points;
    std::vector<u64> bounds_violations;
    std::vector<PiCheckpoint> checkpoints; // one per completed segment
    PiCheckpoint seed{};
    PiCheckpoint last{};
};

// Scan (seed.n, shard_hi) with seed.count = pi(seed.n). When `live` is set,
// segment checkpoints are also handed out as soon as they complete.
inline void scan_shard(u64 shard_hi, PiCheckpoint seed,
                       const ThresholdTable& table, u64 segment_span, bool check_bounds,
                       ShardOutcome& out,
                       const std::function<void(const PiCheckpoint&)>* live)
{
    out.seed = seed;
    PiCheckpoint cur = seed;
    while (cur.n + 1 < shard_hi) {
        u64 seg_last = (shard_hi - 1) - cur.n > segment_span ? cur.n + segment_span
                                                             : shard_hi - 1;
        u64 running = cur.count;
        pi_stream(cur, seg_last, [&](PiCheckpoint cp) {
            running = cp.count;
            if (cp.count >= 1 && cp.n % cp.count == 0)
                out.points.push_back(make_golomb_point(cp.n, cp.count, table));
            if (check_bounds && cp.n >= kBoundsDomainStart
                && !rosser_schoenfeld(cp.n, cp.count).ok)
                out.bounds_violations.push_back(cp.n);
        });
        cur = PiCheckpoint{seg_last, running};
        out.checkpoints.push_back(cur);
        if (live)
            (*live)(cur);
    }
    out.last = cur;
}

inline u64 pi_at_or_zero(u64 m, const LegendreContext& ctx)
{
    return m < 2 ? 0 : pi_point(m, ctx);
}

} // namespace detail

// Core range engine: finds every Golomb point in [lo, hi), optionally checks
// the explicit bounds at every n >= 67 along the way. Shards are seeded
// independently via Legendre counts and cross-checked against the sieve
// stream at every boundary, so the two backends validate each other.
inline VerificationReport run_scan(u64 lo, u64 hi, const ScanOptions& opt = {},
                                   bool check_bounds = false,
                                   std::optional<PiCheckpoint> resume = std::nullopt)
{
    if (lo < 1 || lo >= hi)
        throw std::invalid_argument("run_scan: need 1 <= lo < hi");
    auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.range_lo = lo;
    rep.range_hi = hi;

    LegendreContext ctx(isqrt(hi - 1));
    ThresholdTable table = build_thresholds(43); // covers the full 64-bit range

    PiCheckpoint seed;
    if (resume) {
        if (resume->n < lo - 1)
            throw std::invalid_argument("run_scan: resume checkpoint precedes range");
        if (detail::pi_at_or_zero(resume->n, ctx) != resume->count)
            throw std::runtime_error("run_scan: resume checkpoint fails pi cross-check");
        seed = *resume;
    } else {
        seed = PiCheckpoint{lo - 1, detail::pi_at_or_zero(lo - 1, ctx)};
    }

    if (seed.n >= hi - 1) { // resumed past the end: nothing left
        rep.checkpoint = seed;
        rep.elapsed = std::chrono::steady_clock::now() - t0;
        return rep;
    }

    u64 scan_lo = seed.n + 1;
    u64 span_total = hi - scan_lo;
    u64 want_shards = opt.shards ? opt.shards : std::max<u64>(1, opt.jobs);
    u64 per = ceil_div(span_total, std::min(want_shards, span_total));
    u64 shards = ceil_div(span_total, per); // no empty trailing shard

    auto shard_bounds = [&](u64 s) {
        u64 b = scan_lo + s * per;
        u64 e = hi - b > per ? b + per : hi;
        return std::pair{b, e};
    };
    auto append = [&](detail::ShardOutcome& out) {
        rep.points.insert(rep.points.end(), out.points.begin(), out.points.end());
        rep.bounds_violations.insert(rep.bounds_violations.end(),
                                     out.bounds_violations.begin(),
                                     out.bounds_violations.end());
    };

    unsigned nthreads = static_cast<unsigned>(
        std::min<u64>(std::max(1u, opt.jobs), shards));

    if (nthreads == 1) {
        PiCheckpoint prev = seed;
        for (u64 s = 0; s < shards; ++s) {
            auto [b, e] = shard_bounds(s);
            PiCheckpoint sseed =
                s == 0 ? seed : PiCheckpoint{b - 1, detail::pi_at_or_zero(b - 1, ctx)};
            if (sseed != prev)
                throw std::runtime_error("run_scan: shard seed disagrees with sieve count");
            detail::ShardOutcome out;
            detail::scan_shard(e, sseed, table, opt.segment_span, check_bounds, out,
                               opt.on_checkpoint ? &opt.on_checkpoint : nullptr);
            append(out);
            prev = out.last;
        }
        rep.checkpoint = prev;
    } else {
        std::vector<detail::ShardOutcome> outcomes(shards);
        std::vector<char> ready(shards, 0);
        std::atomic<u64> next{0};
        std::mutex m;
        std::condition_variable cv;
        std::exception_ptr err;

        auto worker = [&] {
            for (;;) {
                {
                    std::lock_guard lk(m);
                    if (err)
                        return;
                }
                u64 s = next.fetch_add(1, std::memory_order_relaxed);
                if (s >= shards)
                    return;
                detail::ShardOutcome out;
                std::exception_ptr e;
                try {
                    auto [b, hi_s] = shard_bounds(s);
                    PiCheckpoint sseed =
                        s == 0 ? seed
                               : PiCheckpoint{b - 1, detail::pi_at_or_zero(b - 1, ctx)};
                    detail::scan_shard(hi_s, sseed, table, opt.segment_span,
                                       check_bounds, out, nullptr);
                } catch (...) {
                    e = std::current_exception();
                }
                {
                    std::lock_guard lk(m);
                    if (e) {
                        if (!err)
                            err = e;
                    } else {
                        outcomes[s] = std::move(out);
                        ready[s] = 1;
                    }
                }
                cv.notify_all();
                if (e)
                    return;
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i)
            pool.emplace_back(worker);

        // merge in ascending shard order as results land
        PiCheckpoint prev = seed;
        std::exception_ptr agg_err;
        for (u64 s = 0; s < shards; ++s) {
            detail::ShardOutcome out;
            {
                std::unique_lock lk(m);
                cv.wait(lk, [&] { return ready[s] || err; });
                if (err)
                    break;
                out = std::move(outcomes[s]);
            }
            try {
                if (out.seed != prev)
                    throw std::runtime_error(
                        "run_scan: shard seed disagrees with sieve count");
                if (opt.on_checkpoint)
                    for (const PiCheckpoint& cp : out.checkpoints)
                        opt.on_checkpoint(cp);
                append(out);
                prev = out.last;
            } catch (...) {
                agg_err = std::current_exception();
                std::lock_guard lk(m);
                if (!err)
                    err = agg_err;
                break;
            }
        }
        for (auto& t : pool)
            t.join();
        if (agg_err)
            std::rethrow_exception(agg_err);
        if (err)
            std::rethrow_exception(err);
        rep.checkpoint = prev;
    }

    for (const GolombPoint& p : rep.points) {
        if (p.n >= kBoundsDomainStart) {
            ++rep.checked;
            if (!p.theorem3_match.value_or(false))
                rep.failures.push_back(Theorem3Failure{p.n, p.pi_n, p.theorem3_val});
        }
    }

    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

// Streams every Golomb point in [lo, hi) into the sink. The seed must sit at
// lo - 1 and is cross-checked against an independent Legendre count.
template <class Sink>
void scan_golomb_points(u64 lo, u64 hi, PiCheckpoint seed, Sink&& sink)
{
    if (lo < 1 || lo >= hi)
        throw std::invalid_argument("scan_golomb_points: need 1 <= lo < hi");
    if (seed.n != lo - 1)
        throw std::invalid_argument("scan_golomb_points: seed must sit at lo - 1");
    u64 expect = seed.n < 2 ? 0 : pi_point(seed.n);
    if (expect != seed.count)
        throw std::runtime_error("scan_golomb_points: seed fails pi cross-check");
    ThresholdTable table = build_thresholds(43);
    pi_stream(seed, hi - 1, [&](PiCheckpoint cp) {
        if (cp.count >= 1 && cp.n % cp.count == 0)
            sink(make_golomb_point(cp.n, cp.count, table));
    });
}

inline std::vector<GolombPoint> scan_golomb_points(u64 lo, u64 hi, PiCheckpoint seed)
{
    std::vector<GolombPoint> out;
    scan_golomb_points(lo, hi, seed, [&](const GolombPoint& p) { out.push_back(p); });
    return out;
}

inline VerificationReport verify_theorem3(u64 lo, u64 hi, const ScanOptions& opt = {})
{
    return run_scan(lo, hi, opt, /*check_bounds=*/false);
}

inline VerificationReport verify_bounds_range(u64 lo, u64 hi, const ScanOptions& opt = {})
{
    return run_scan(lo, hi, opt, /*check_bounds=*/true);
}

// Least n <= search_limit with n = k * pi(n); empty when the scan exhausts
// the limit (the underlying theorem gives no witness bound).
inline std::optional<u64> first_attainment(u64 k, u64 search_limit)
{
    if (k < 2)
        throw std::invalid_argument("first_attainment: k must be at least 2");
    if (search_limit < 2)
        return std::nullopt;
    std::optional<u64> hit;
    pi_stream(PiCheckpoint{1, 0}, search_limit, [&](PiCheckpoint cp) {
        if (cp.count >= 1 && cp.n % cp.count == 0 && cp.n / cp.count == k) {
            hit = cp.n;
            return false;
        }
        return true;
    });
    return hit;
}

} // namespace golomb
