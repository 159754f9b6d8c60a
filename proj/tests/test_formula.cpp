#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "golomb/formula.hpp"
#include "golomb/pi_stream.hpp"
#include "golomb/precise.hpp"
#include "golomb/table1.hpp"
#include "golomb/thresholds.hpp"

#include "oracles.hpp"

using golomb::u64;

// Breakpoints of floor(ln n - 1/2), precomputed with an independent
// arbitrary-precision tool and frozen here.
static const std::vector<u64> kFrozenThresholds{
    2,       5,        13,       34,       91,       245,      666,
    1809,    4915,     13360,    36316,    98716,    268338,   729417,
    1982760, 5389699,  14650720, 39824785, 108254988, 294267567, 799902178,
};

TEST_CASE("threshold table matches the frozen breakpoints")
{
    auto table = golomb::build_thresholds(20);
    REQUIRE(table.k_max() == 20);
    REQUIRE(table.entries() == kFrozenThresholds);
    REQUIRE(table.coverage_last() == 2174359553); // t_21 - 1 = floor(e^21.5)
}

TEST_CASE("threshold table matches the log-route oracle")
{
    auto table = golomb::build_thresholds(20);
    for (u64 k = 0; k <= 20; ++k)
        REQUIRE(table.threshold(k) == oracle::threshold_oracle(k));
}

TEST_CASE("threshold entries pass two-sided verification")
{
    auto table = golomb::build_thresholds(20);
    for (u64 k = 0; k <= table.k_max(); ++k) {
        u64 t = table.threshold(k);
        REQUIRE(golomb::precise::cmp_log_shift(t, k) > 0);
        REQUIRE(golomb::precise::cmp_log_shift(t - 1, k) < 0);
    }
}

TEST_CASE("threshold builder rejects out-of-range requests")
{
    REQUIRE_THROWS_AS(golomb::build_thresholds(0), std::invalid_argument);
    REQUIRE_THROWS_AS(golomb::build_thresholds(44), std::overflow_error);
    // the deepest buildable table covers the whole 64-bit range
    auto deepest = golomb::build_thresholds(43);
    REQUIRE(deepest.coverage_last() == ~u64{0});
}

TEST_CASE("floor_log_shift classifies boundaries exactly")
{
    auto table = golomb::build_thresholds(20);
    REQUIRE(golomb::floor_log_shift(96, table) == 4);
    REQUIRE(golomb::floor_log_shift(3094, table) == 7);
    REQUIRE(golomb::floor_log_shift(13, table) == 2);
    REQUIRE(golomb::floor_log_shift(12, table) == 1);
    REQUIRE(golomb::floor_log_shift(2, table) == 0);
    for (u64 k = 1; k <= 20; ++k) {
        u64 t = table.threshold(k);
        REQUIRE(golomb::floor_log_shift(t - 1, table) == k - 1);
        REQUIRE(golomb::floor_log_shift(t, table) == k);
    }
    REQUIRE_THROWS_AS(golomb::floor_log_shift(1, table), std::invalid_argument);
    REQUIRE_THROWS_AS(golomb::floor_log_shift(table.coverage_last() + 1, table),
                      std::out_of_range);
}

TEST_CASE("floor_log_shift equals the extended-precision floor on random n")
{
    auto table = golomb::build_thresholds(43);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        u64 n = rng() % 1'000'000'000'000 + 2;
        INFO(n);
        REQUIRE(golomb::floor_log_shift(n, table) ==
                golomb::precise::floor_log_shift_exact(n));
    }
}

TEST_CASE("certified exponential floors anchor the thresholds")
{
    for (u64 k = 0; k <= 20; ++k)
        REQUIRE(golomb::precise::floor_exp_half(k) == kFrozenThresholds[k] - 1);
    REQUIRE_NOTHROW(golomb::precise::floor_exp_half(43));
    REQUIRE_THROWS_AS(golomb::precise::floor_exp_half(44), std::overflow_error);
}

TEST_CASE("rosser_schoenfeld evaluates the explicit bounds")
{
    auto r = golomb::rosser_schoenfeld(100, 25);
    REQUIRE(r.ok);
    REQUIRE_THAT(r.lower, Catch::Matchers::WithinRel(24.359526029231006, 1e-12));
    REQUIRE_THAT(r.upper, Catch::Matchers::WithinRel(32.204354032266723, 1e-12));
    REQUIRE_THAT(r.ratio, Catch::Matchers::WithinRel(4.0, 1e-12));

    REQUIRE(golomb::rosser_schoenfeld(67, 19).ok);
    REQUIRE_THROWS_AS(golomb::rosser_schoenfeld(66, 18), std::domain_error);

    SECTION("the comparisons are strict and two-sided")
    {
        REQUIRE_FALSE(golomb::rosser_schoenfeld(100, 24).ok); // below the lower bound
        REQUIRE(golomb::rosser_schoenfeld(100, 32).ok);
        REQUIRE_FALSE(golomb::rosser_schoenfeld(100, 33).ok); // above the upper bound
    }
}

TEST_CASE("ratio_check mirrors rosser_schoenfeld through the other route")
{
    REQUIRE(golomb::ratio_check(96, 24));
    REQUIRE(golomb::ratio_check(330, 66));
    REQUIRE_FALSE(golomb::ratio_check(100, 24));
    REQUIRE_THROWS_AS(golomb::ratio_check(2, 1), std::domain_error);
    REQUIRE_THROWS_AS(golomb::ratio_check(100, 0), std::invalid_argument);

    SECTION("equivalence of forms across a full range")
    {
        golomb::pi_stream(golomb::PiCheckpoint{66, 18}, 10000,
                          [&](golomb::PiCheckpoint cp) {
                              INFO(cp.n);
                              REQUIRE(golomb::rosser_schoenfeld(cp.n, cp.count).ok ==
                                      golomb::ratio_check(cp.n, cp.count));
                          });
    }
}

TEST_CASE("the ratio sandwich has width one")
{
    for (u64 n : {67u, 100u, 96u, 4000u, 1000000u, 999999937u}) {
        auto r = golomb::rosser_schoenfeld(n, 19); // pi value irrelevant here
        REQUIRE(std::fabs((r.ratio_hi - r.ratio_lo) - 1.0) < 1e-12);
    }
}

TEST_CASE("theorem3_formula divides out the floor")
{
    auto table = golomb::build_thresholds(20);
    REQUIRE(golomb::theorem3_formula(96, table) == 24);
    REQUIRE(golomb::theorem3_formula(100, table) == 25);
    REQUIRE(golomb::theorem3_formula(1008, table) == 168);
    REQUIRE_FALSE(golomb::theorem3_formula(97, table)); // floor 4 does not divide 97
    REQUIRE_THROWS_AS(golomb::theorem3_formula(66, table), std::domain_error);
}

TEST_CASE("table_variant_formula evaluates the header expression")
{
    REQUIRE(golomb::table_variant_formula(96) == 23);
    REQUIRE(golomb::table_variant_formula(3094) == 410);
    REQUIRE(golomb::table_variant_formula(2) == 10);
    REQUIRE(golomb::table_variant_formula(100) == 24);
    REQUIRE_THROWS_AS(golomb::table_variant_formula(1), std::invalid_argument);
}

TEST_CASE("the two formula variants disagree at n = 96")
{
    auto table = golomb::build_thresholds(20);
    REQUIRE(golomb::theorem3_formula(96, table) == 24);
    REQUIRE(golomb::table_variant_formula(96) != 24);
}

TEST_CASE("make_golomb_point populates both variants")
{
    auto table = golomb::build_thresholds(20);

    auto p = golomb::make_golomb_point(96, 24, table);
    REQUIRE(p.k == 4);
    REQUIRE(p.floor_val == 4);
    REQUIRE(p.theorem3_val == 24);
    REQUIRE(p.table_variant_val == 23);
    REQUIRE(p.theorem3_match == true);
    REQUIRE(p.table_variant_match == false);

    SECTION("below-domain points carry no verdicts")
    {
        auto q = golomb::make_golomb_point(27, 9, table);
        REQUIRE(q.k == 3);
        REQUIRE(q.floor_val == 2);
        REQUIRE_FALSE(q.theorem3_val.has_value());
        REQUIRE_FALSE(q.theorem3_match.has_value());
        REQUIRE_FALSE(q.table_variant_match.has_value());
    }

    SECTION("non-divisors are rejected")
    {
        REQUIRE_THROWS_AS(golomb::make_golomb_point(97, 25, table),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(golomb::make_golomb_point(10, 0, table),
                          std::invalid_argument);
    }
}

TEST_CASE("compare_with_table reports typed diffs")
{
    auto table = golomb::build_thresholds(20);
    std::vector<golomb::GolombPoint> pts{golomb::make_golomb_point(96, 24, table),
                                         golomb::make_golomb_point(100, 25, table)};
    std::vector<golomb::TableRow> fixture{{96, 24}, {100, 25}};
    REQUIRE(golomb::compare_with_table(pts, fixture).empty());

    SECTION("a corrupted count is a value mismatch")
    {
        fixture[1].pi_n = 26;
        auto diffs = golomb::compare_with_table(pts, fixture);
        REQUIRE(diffs.size() == 1);
        REQUIRE(diffs[0].kind == golomb::TableDiff::Kind::value_mismatch);
        REQUIRE(diffs[0].n == 100);
        REQUIRE_THAT(diffs[0].describe(),
                     Catch::Matchers::ContainsSubstring("expected pi=26"));
    }

    SECTION("a deleted fixture row makes the scan's point extra")
    {
        fixture.pop_back();
        auto diffs = golomb::compare_with_table(pts, fixture);
        REQUIRE(diffs.size() == 1);
        REQUIRE(diffs[0].kind == golomb::TableDiff::Kind::extra_point);
        REQUIRE_THAT(diffs[0].describe(),
                     Catch::Matchers::ContainsSubstring("extra point found"));
    }

    SECTION("a fixture row the scan lacks is missing")
    {
        fixture.push_back({120, 30});
        auto diffs = golomb::compare_with_table(pts, fixture);
        REQUIRE(diffs.size() == 1);
        REQUIRE(diffs[0].kind == golomb::TableDiff::Kind::missing_point);
        REQUIRE_THAT(diffs[0].describe(),
                     Catch::Matchers::ContainsSubstring("missing point n=120"));
    }
}

TEST_CASE("the embedded fixture is internally consistent")
{
    REQUIRE(golomb::kEmbeddedTable1.size() == 22);
    auto table = golomb::build_thresholds(20);
    for (const auto& row : golomb::kEmbeddedTable1) {
        REQUIRE(row.n % row.pi_n == 0);
        // every printed count is what the formula produces
        REQUIRE(golomb::theorem3_formula(row.n, table) == row.pi_n);
    }
}
