#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "golomb/base.hpp"
#include "golomb/formula.hpp"

namespace golomb {

struct TableRow {
    u64 n;
    u64 pi_n;
};

// The published fixture: every n in [67, 4000) whose count divides it,
// together with the counts, exactly as printed.
inline constexpr std::array<TableRow, 22> kEmbeddedTable1{{
    {96, 24},    {100, 25},   {120, 30},   {330, 66},   {335, 67},  {340, 68},
    {350, 70},   {355, 71},   {360, 72},   {1008, 168}, {1080, 180}, {1092, 182},
    {1116, 186}, {1122, 187}, {1128, 188}, {1134, 189}, {3059, 437}, {3066, 438},
    {3073, 439}, {3080, 440}, {3087, 441}, {3094, 442},
}};

static_assert(kEmbeddedTable1.size() == 22);
static_assert(kEmbeddedTable1.front().n == 96 && kEmbeddedTable1.front().pi_n == 24);
static_assert(kEmbeddedTable1.back().n == 3094 && kEmbeddedTable1.back().pi_n == 442);
static_assert([] {
    for (std::size_t i = 1; i < kEmbeddedTable1.size(); ++i)
        if (kEmbeddedTable1[i - 1].n >= kEmbeddedTable1[i].n)
            return false;
    return true;
}());

struct TableDiff {
    enum class Kind { value_mismatch, missing_point, extra_point };

    Kind kind;
    u64 n = 0;
    u64 expected_pi = 0; // fixture value; 0 for extra_point
    u64 actual_pi = 0;   // scanned value; 0 for missing_point
    std::optional<u64> formula_val; // scanned theorem3 value, when present

    std::string describe() const
    {
        switch (kind) {
        case Kind::value_mismatch:
            return "row n=" + std::to_string(n) + ": expected pi=" +
                   std::to_string(expected_pi) + ", scan found pi=" +
                   std::to_string(actual_pi) + ", formula value " +
                   (formula_val ? std::to_string(*formula_val) : std::string("absent"));
        case Kind::missing_point:
            return "missing point n=" + std::to_string(n) + " (expected pi=" +
                   std::to_string(expected_pi) + ")";
        case Kind::extra_point:
            return "extra point found: n=" + std::to_string(n) + " (pi=" +
                   std::to_string(actual_pi) + ")";
        }
        return {};
    }
};

// Point-for-point comparison of a scan against a fixture: same n set, same
// counts, and the formula value agreeing with the count at every row. An
// extra point indicts the fixture, not the scan; the kinds keep that apart.
inline std::vector<TableDiff> compare_with_table(const std::vector<GolombPoint>& points,
                                                 const std::vector<TableRow>& fixture)
{
    std::vector<TableDiff> diffs;
    std::size_t i = 0, j = 0;
    while (i < fixture.size() || j < points.size()) {
        if (j == points.size() || (i < fixture.size() && fixture[i].n < points[j].n)) {
            diffs.push_back({TableDiff::Kind::missing_point, fixture[i].n,
                             fixture[i].pi_n, 0, std::nullopt});
            ++i;
        } else if (i == fixture.size() || points[j].n < fixture[i].n) {
            diffs.push_back({TableDiff::Kind::extra_point, points[j].n, 0,
                             points[j].pi_n, points[j].theorem3_val});
            ++j;
        } else {
            const GolombPoint& p = points[j];
            bool formula_agrees = p.theorem3_val && *p.theorem3_val == fixture[i].pi_n;
            if (p.pi_n != fixture[i].pi_n || !formula_agrees)
                diffs.push_back({TableDiff::Kind::value_mismatch, fixture[i].n,
                                 fixture[i].pi_n, p.pi_n, p.theorem3_val});
            ++i;
            ++j;
        }
    }
    return diffs;
}

inline std::vector<TableDiff> compare_with_table(const std::vector<GolombPoint>& points)
{
    return compare_with_table(
        points, std::vector<TableRow>(kEmbeddedTable1.begin(), kEmbeddedTable1.end()));
}

} // namespace golomb
