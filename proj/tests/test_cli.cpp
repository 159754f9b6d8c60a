#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "golomb/checkpoint.hpp"
#include "golomb/format.hpp"
#include "golomb/table1.hpp"

#include "cli_harness.hpp"

TEST_CASE("pi prints the count and validates input")
{
    REQUIRE(cli::run("pi 100").out == "25\n");
    REQUIRE(cli::run("pi 100").code == 0);
    REQUIRE(cli::run("pi 1").out == "0\n");
    REQUIRE(cli::run("pi 1000000").out == "78498\n");
    REQUIRE(cli::run("pi").code == 2);
    REQUIRE(cli::run("pi 0").code == 2);
    REQUIRE(cli::run("pi twelve").code == 2);
}

TEST_CASE("scan emits the published range as CSV")
{
    auto r = cli::run("scan 67 4000 --format csv");
    REQUIRE(r.code == 0);
    REQUIRE(cli::count_lines(r.out) == 23); // header + 22 rows
    std::istringstream is(r.out);
    auto pts = golomb::parse_scan_csv(is);
    REQUIRE(pts.size() == 22);
    for (const auto& p : pts)
        REQUIRE(p.theorem3_match == true);
}

TEST_CASE("scan rejects bad ranges")
{
    REQUIRE(cli::run("scan 4000 67").code == 2);
    REQUIRE(cli::run("scan 0 50").code == 2);
    REQUIRE(cli::run("scan 10 10").code == 2);
    REQUIRE(cli::run("scan 67 2000000000").code == 2); // guardrail without --force
    REQUIRE(cli::run("scan 67 4000 --format yaml").code == 2);
}

TEST_CASE("scan below the domain leaves verdicts null")
{
    auto r = cli::run("scan 1 67 --format json");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    auto pts = golomb::parse_scan_json(is);
    REQUIRE(pts.size() == 7);
    for (const auto& p : pts) {
        REQUIRE_FALSE(p.theorem3_val.has_value());
        REQUIRE_FALSE(p.theorem3_match.has_value());
    }
}

TEST_CASE("scan output is identical across job counts")
{
    auto one = cli::run("scan 67 100000 --format csv --jobs 1");
    auto three = cli::run("scan 67 100000 --format csv --jobs 3");
    auto eight = cli::run("scan 67 100000 --format csv --jobs 8");
    REQUIRE(one.code == 0);
    REQUIRE(one.out == three.out);
    REQUIRE(one.out == eight.out);
}

TEST_CASE("verify-table passes against the embedded fixture")
{
    auto r = cli::run("verify-table");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("22/22 rows match") != std::string::npos);
}

TEST_CASE("verify-table flags a corrupted fixture")
{
    std::string fixture = cli::temp_path("fixture");
    // n = 100 printed with the wrong count
    std::string rows;
    for (const auto& row : golomb::kEmbeddedTable1) {
        rows += std::to_string(row.n) + " " +
                std::to_string(row.n == 100 ? 26 : row.pi_n) + "\n";
    }
    cli::write_file(fixture, rows);
    auto r = cli::run("verify-table --table " + fixture);
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("row n=100") != std::string::npos);
    REQUIRE(r.out.find("21/22 rows match") != std::string::npos);
    std::remove(fixture.c_str());
}

TEST_CASE("verify-table flags a deleted fixture row as an extra point")
{
    std::string fixture = cli::temp_path("fixture");
    std::string rows;
    for (const auto& row : golomb::kEmbeddedTable1)
        if (row.n != 120)
            rows += std::to_string(row.n) + " " + std::to_string(row.pi_n) + "\n";
    cli::write_file(fixture, rows);
    auto r = cli::run("verify-table --table " + fixture);
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("extra point found: n=120") != std::string::npos);
    REQUIRE(r.out.find("21/21 rows match") != std::string::npos);
    std::remove(fixture.c_str());
}

TEST_CASE("verify-bounds reports a clean range")
{
    auto r = cli::run("verify-bounds 67 10000");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 violations\n");

    SECTION("the short alias works")
    {
        auto alias = cli::run("bounds 67 10000");
        REQUIRE(alias.code == 0);
        REQUIRE(alias.out == r.out);
    }

    REQUIRE(cli::run("verify-bounds 10 9").code == 2);
}

TEST_CASE("first-ratio prints the witness or exhausts")
{
    auto r = cli::run("first-ratio 4 --limit 10000");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "96\n");
    REQUIRE(cli::run("first-ratio 23 --limit 1000").code == 3);
    REQUIRE(cli::run("first-ratio 1 --limit 10").code == 2);
    REQUIRE(cli::run("first-ratio 4").code == 2); // --limit is mandatory
}

TEST_CASE("thresholds prints one breakpoint per line")
{
    auto r = cli::run("thresholds 8");
    REQUIRE(r.code == 0);
    REQUIRE(cli::count_lines(r.out) == 9);
    REQUIRE(r.out.find("7 1809\n") != std::string::npos);
    REQUIRE(cli::run("thresholds 0").code == 2);
    REQUIRE(cli::run("thresholds 44").code == 2);
}

TEST_CASE("scan resumes from a checkpoint file")
{
    std::string ckpt = cli::temp_path("ckpt");
    auto full = cli::run("scan 1 5000000 --format csv --resume " + ckpt);
    REQUIRE(full.code == 0);

    auto stored = golomb::load_last_checkpoint(ckpt);
    REQUIRE(stored.has_value());
    REQUIRE(stored->n == 4999999);

    SECTION("a completed scan resumes into a no-op")
    {
        auto again = cli::run("scan 1 5000000 --format csv --resume " + ckpt);
        REQUIRE(again.code == 0);
        REQUIRE(cli::count_lines(again.out) == 1); // header only
    }

    SECTION("a truncated checkpoint file replays only the remainder")
    {
        std::ifstream in(ckpt);
        std::string first_line;
        std::getline(in, first_line);
        in.close();
        cli::write_file(ckpt, first_line + "\n");
        auto cp = golomb::parse_checkpoint_line(first_line);
        REQUIRE(cp.has_value());
        REQUIRE(cp->n < 4999999);

        auto rest = cli::run("scan 1 5000000 --format csv --resume " + ckpt);
        REQUIRE(rest.code == 0);

        std::istringstream full_is(full.out), rest_is(rest.out);
        auto full_pts = golomb::parse_scan_csv(full_is);
        auto rest_pts = golomb::parse_scan_csv(rest_is);
        std::vector<golomb::GolombPoint> expect;
        for (const auto& p : full_pts)
            if (p.n > cp->n)
                expect.push_back(p);
        REQUIRE(rest_pts == expect);
    }

    std::remove(ckpt.c_str());
}
