#pragma once
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "golomb/base.hpp"
#include "golomb/precise.hpp"

namespace golomb {

// Integer breakpoints for evaluating floor(ln n - 1/2) without touching
// floating point at decision time: t_k is the least integer strictly
// exceeding e^(k+1/2), so floor(ln n - 1/2) = k exactly when
// t_k <= n < t_{k+1}.
class ThresholdTable {
public:
    u64 k_max() const { return t_.size() - 1; }

    u64 threshold(u64 k) const
    {
        if (k >= t_.size())
            throw std::out_of_range("ThresholdTable: k beyond table");
        return t_[k];
    }

    const std::vector<u64>& entries() const { return t_; }

    // largest n the table can classify
    u64 coverage_last() const { return coverage_last_; }

    u64 floor_log_shift(u64 n) const
    {
        if (n < 2)
            throw std::invalid_argument("floor_log_shift: n must be at least 2");
        if (n > coverage_last_)
            throw std::out_of_range("floor_log_shift: n beyond table coverage");
        auto it = std::upper_bound(t_.begin(), t_.end(), n);
        return static_cast<u64>(it - t_.begin()) - 1;
    }

private:
    friend ThresholdTable build_thresholds(u64 k_max);
    std::vector<u64> t_; // t_[k] for k = 0..k_max
    u64 coverage_last_ = 0;
};

inline ThresholdTable build_thresholds(u64 k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("build_thresholds: k_max must be at least 1");
    ThresholdTable table;
    table.t_.reserve(k_max + 1);
    for (u64 k = 0; k <= k_max; ++k) {
        // e^(k+1/2) is irrational, so the least integer exceeding it is floor + 1
        u64 t = precise::floor_exp_half(k) + 1;
        // two-sided verification: ln(t_k) - 1/2 > k and ln(t_k - 1) - 1/2 < k
        if (precise::cmp_log_shift(t, k) <= 0 || precise::cmp_log_shift(t - 1, k) >= 0)
            throw std::logic_error("build_thresholds: two-sided verification failed");
        table.t_.push_back(t);
    }
    // coverage ends just below t_{k_max+1}, or at the 64-bit ceiling once
    // that breakpoint no longer fits
    try {
        table.coverage_last_ = precise::floor_exp_half(k_max + 1);
    } catch (const std::overflow_error&) {
        table.coverage_last_ = ~u64{0};
    }
    return table;
}

inline u64 floor_log_shift(u64 n, const ThresholdTable& table)
{
    return table.floor_log_shift(n);
}

} // namespace golomb
