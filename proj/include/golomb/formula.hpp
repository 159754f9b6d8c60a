#pragma once
#include <cmath>
#include <optional>
#include <stdexcept>

#include "golomb/base.hpp"
#include "golomb/precise.hpp"
#include "golomb/thresholds.hpp"

namespace golomb {

// The explicit bounds (and the formula built on them) hold for n >= 67.
inline constexpr u64 kBoundsDomainStart = 67;

struct BoundsResult {
    u64 n = 0;
    u64 pi_n = 0;
    double lower = 0;    // n / (ln n - 1/2)
    double upper = 0;    // n / (ln n - 3/2)
    double ratio = 0;    // n / pi_n
    double ratio_lo = 0; // ln n - 3/2
    double ratio_hi = 0; // ln n - 1/2
    bool ok = false;
};

namespace detail {

inline constexpr double kRelGuard = 1e-9;

// Hardware comparison, escalated to a certified one when the operands sit
// within the relative guard band of each other.
template <class Certify>
int guarded_cmp(double value, double boundary, Certify&& certify)
{
    double scale = std::max(std::fabs(value), std::fabs(boundary));
    if (std::fabs(value - boundary) > kRelGuard * scale)
        return value < boundary ? -1 : 1;
    return certify();
}

} // namespace detail

// n/(ln n - 1/2) < pi(n) < n/(ln n - 3/2), strict on both sides.
inline BoundsResult rosser_schoenfeld(u64 n, u64 pi_n)
{
    if (n < kBoundsDomainStart)
        throw std::domain_error("rosser_schoenfeld: bounds require n >= 67");
    BoundsResult r;
    r.n = n;
    r.pi_n = pi_n;
    double ln = std::log(static_cast<double>(n));
    r.ratio_hi = ln - 0.5;
    r.ratio_lo = ln - 1.5;
    r.lower = static_cast<double>(n) / r.ratio_hi;
    r.upper = static_cast<double>(n) / r.ratio_lo;
    r.ratio = static_cast<double>(n) / static_cast<double>(pi_n);
    double count = static_cast<double>(pi_n);
    int vs_lower = detail::guarded_cmp(count, r.lower,
        [&] { return precise::cmp_count_vs_bound(pi_n, n, 1); });
    int vs_upper = detail::guarded_cmp(count, r.upper,
        [&] { return precise::cmp_count_vs_bound(pi_n, n, 3); });
    r.ok = vs_lower > 0 && vs_upper < 0;
    return r;
}

// The same inequality in its rearranged form ln n - 3/2 < n/pi(n) < ln n - 1/2,
// deliberately routed through the ratio rather than the count so the two
// checks can cross-validate each other.
inline bool ratio_check(u64 n, u64 pi_n)
{
    if (pi_n == 0)
        throw std::invalid_argument("ratio_check: pi_n must be positive");
    if (n < kBoundsDomainStart)
        throw std::domain_error("ratio_check: bounds require n >= 67");
    double ratio = static_cast<double>(n) / static_cast<double>(pi_n);
    double ln = std::log(static_cast<double>(n));
    int vs_lo = detail::guarded_cmp(ratio, ln - 1.5,
        [&] { return precise::cmp_ratio_vs_bound(n, pi_n, 3); });
    int vs_hi = detail::guarded_cmp(ratio, ln - 0.5,
        [&] { return precise::cmp_ratio_vs_bound(n, pi_n, 1); });
    return vs_lo > 0 && vs_hi < 0;
}

// n / floor(ln n - 1/2) when the floor divides n; empty otherwise.
inline std::optional<u64> theorem3_formula(u64 n, const ThresholdTable& table)
{
    if (n < kBoundsDomainStart)
        throw std::domain_error("theorem3_formula: formula domain starts at n = 67");
    u64 k = table.floor_log_shift(n);
    if (k == 0 || n % k != 0)
        return std::nullopt;
    return n / k;
}

// floor(n / (ln n - 1/2)) — the variant printed in the table header, always
// evaluated with certified precision.
inline u64 table_variant_formula(u64 n)
{
    return precise::floor_quotient_log(n);
}

struct GolombPoint {
    u64 n = 0;
    u64 pi_n = 0;
    u64 k = 0;         // the integer ratio n / pi_n
    u64 floor_val = 0; // floor(ln n - 1/2)
    std::optional<u64> theorem3_val; // n / floor_val when divisible, else empty
    u64 table_variant_val = 0;       // floor(n / (ln n - 1/2))
    std::optional<bool> theorem3_match;      // empty below the n >= 67 domain
    std::optional<bool> table_variant_match; // likewise

    friend bool operator==(const GolombPoint&, const GolombPoint&) = default;
};

inline GolombPoint make_golomb_point(u64 n, u64 pi_n, const ThresholdTable& table)
{
    if (pi_n == 0 || n % pi_n != 0)
        throw std::invalid_argument("make_golomb_point: pi_n must divide n");
    GolombPoint p;
    p.n = n;
    p.pi_n = pi_n;
    p.k = n / pi_n;
    p.floor_val = table.floor_log_shift(n);
    p.table_variant_val = table_variant_formula(n);
    if (n >= kBoundsDomainStart) {
        p.theorem3_val = theorem3_formula(n, table);
        p.theorem3_match = p.theorem3_val && *p.theorem3_val == pi_n;
        p.table_variant_match = p.table_variant_val == pi_n;
    }
    // below the domain, theorem3_val stays absent and both match flags
    // stay not-applicable
    return p;
}

} // namespace golomb
