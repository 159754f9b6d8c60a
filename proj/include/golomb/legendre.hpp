#pragma once
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "golomb/base.hpp"
#include "golomb/sieve.hpp"

namespace golomb {

// Legendre prime counter: pi(x) = phi(x, a) + a - 1 with a = pi(sqrt(x)),
// where phi(x, a) counts the integers in [1, x] untouched by the first a
// primes. Immutable after construction, safe to share across threads.
//
// The phi cache holds one residue table per wheel level: level a stores
// phi(r, a) for every r below W_a = p_1*...*p_a, which answers phi(x, a)
// for any x by periodicity. Memory stays bounded by the deepest wheel
// modulus (wheel_depth = 7 keeps the tables ~2 MB).
class LegendreContext {
public:
    static constexpr unsigned kMaxWheelDepth = 8;

    explicit LegendreContext(u64 root_bound, unsigned wheel_depth = 7)
        : bound_(std::max<u64>(root_bound, 2))
    {
        if (wheel_depth < 1 || wheel_depth > kMaxWheelDepth)
            throw std::invalid_argument("LegendreContext: wheel depth out of range");
        if (bound_ > u64{0xFFFFFFFF})
            throw std::invalid_argument("LegendreContext: root bound beyond 64-bit pi coverage");
        root_primes_ = simple_sieve(bound_);
        wheel_depth_ = std::min<unsigned>(wheel_depth, static_cast<unsigned>(root_primes_.size()));
        build_wheels();
    }

    const std::vector<u64>& root_primes() const { return root_primes_; }
    u64 root_bound() const { return bound_; }
    u64 memo_cutoff() const { return wheel_mod_.empty() ? 0 : wheel_mod_.back(); }

    // Count of integers in [1, x] with no prime divisor among the first a primes.
    u64 phi(u64 x, u64 a) const
    {
        if (a > root_primes_.size())
            throw std::invalid_argument("phi: a exceeds available primes");
        return phi_rec(x, a);
    }

    // pi(x) for any x with sqrt(x) <= root_bound.
    u64 pi(u64 x) const
    {
        if (x == 0)
            throw std::invalid_argument("pi: x must be at least 1");
        if (x == 1)
            return 0;
        if (x <= bound_)
            return pi_small(x);
        u64 s = isqrt(x);
        if (s > bound_)
            throw std::invalid_argument("pi: x exceeds context coverage");
        u64 a = pi_small(s);
        return phi_rec(x, a) + a - 1;
    }

private:
    u64 phi_rec(u64 x, u64 a) const
    {
        if (x == 0)
            return 0;
        if (a == 0)
            return x;
        if (a <= wheel_depth_) {
            u64 w = wheel_mod_[a - 1];
            const auto& tbl = wheel_phi_[a - 1];
            return (x / w) * tbl[w - 1] + tbl[x % w];
        }
        u64 pa = root_primes_[a - 1];
        if (x <= pa)
            return 1; // only 1 survives once every prime <= x is excluded
        // Once p_{a+1}^2 > x the survivors are 1 and the primes in (p_a, x].
        if (x <= bound_ && (a >= root_primes_.size() ||
                            root_primes_[a] * root_primes_[a] > x))
            return pi_small(x) - a + 1;
        return phi_rec(x, a - 1) - phi_rec(x / pa, a - 1);
    }

    // pi(x) for x <= root_bound, by binary search over root_primes.
    u64 pi_small(u64 x) const
    {
        auto it = std::upper_bound(root_primes_.begin(), root_primes_.end(), x);
        return static_cast<u64>(it - root_primes_.begin());
    }

    void build_wheels()
    {
        wheel_mod_.resize(wheel_depth_);
        wheel_phi_.resize(wheel_depth_);
        u64 w = 1;
        for (unsigned a = 1; a <= wheel_depth_; ++a) {
            w *= root_primes_[a - 1];
            wheel_mod_[a - 1] = w;
            auto& tbl = wheel_phi_[a - 1];
            tbl.assign(w, 1);
            tbl[0] = 0;
            for (unsigned j = 0; j < a; ++j) {
                u64 p = root_primes_[j];
                for (u64 m = p; m < w; m += p)
                    tbl[m] = 0;
            }
            // prefix sums: tbl[r] = phi(r, a)
            for (u64 r = 1; r < w; ++r)
                tbl[r] += tbl[r - 1];
        }
    }

    u64 bound_;
    std::vector<u64> root_primes_;
    unsigned wheel_depth_ = 0;
    std::vector<u64> wheel_mod_;
    std::vector<std::vector<u32>> wheel_phi_;
};

inline u64 phi(u64 x, u64 a, const LegendreContext& ctx)
{
    return ctx.phi(x, a);
}

inline u64 pi_point(u64 x, const LegendreContext& ctx)
{
    return ctx.pi(x);
}

inline u64 pi_point(u64 x)
{
    if (x == 0)
        throw std::invalid_argument("pi_point: x must be at least 1");
    LegendreContext ctx(isqrt(x));
    return ctx.pi(x);
}

} // namespace golomb
