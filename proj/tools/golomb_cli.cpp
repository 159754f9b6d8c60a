#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "golomb/golomb.hpp"

namespace {

using golomb::u64;

// 0 = all checks pass, 1 = mathematical verification failure,
// 2 = usage error, 3 = search exhausted
constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

constexpr u64 kScanGuardrail = 1'000'000'000;

int usage_error(const std::string& msg)
{
    std::cerr << "error: " << msg << '\n';
    return kExitUsage;
}

bool check_range(u64 from, u64 to, bool force, int& rc)
{
    if (from < 1 || from >= to) {
        rc = usage_error("need 1 <= FROM < TO");
        return false;
    }
    if (to > kScanGuardrail && !force) {
        rc = usage_error("range end exceeds 1e9; pass --force to run anyway");
        return false;
    }
    return true;
}

void emit_points(const std::vector<golomb::GolombPoint>& points, const std::string& format)
{
    if (format == "csv")
        golomb::write_scan_csv(std::cout, points);
    else if (format == "json")
        golomb::write_scan_json(std::cout, points);
    else
        golomb::write_scan_table(std::cout, points);
}

void report_timing(const char* what, const golomb::VerificationReport& rep)
{
    std::fprintf(stderr, "%s [%llu, %llu): %zu points, %.3fs\n", what,
                 static_cast<unsigned long long>(rep.range_lo),
                 static_cast<unsigned long long>(rep.range_hi), rep.points.size(),
                 rep.elapsed.count());
}

int cmd_pi(u64 x)
{
    u64 legendre = golomb::pi_point(x);
    if (x >= 2 && x <= 1'000'000) {
        u64 sieved = 0;
        golomb::pi_stream(golomb::PiCheckpoint{1, 0}, x,
                          [&](golomb::PiCheckpoint cp) { sieved = cp.count; });
        if (sieved != legendre)
            throw std::runtime_error("pi: sieve and Legendre backends disagree");
    }
    std::cout << legendre << '\n';
    return kExitPass;
}

int cmd_scan(u64 from, u64 to, const std::string& format, unsigned jobs,
             const std::string& resume_path, bool force)
{
    int rc = kExitPass;
    if (!check_range(from, to, force, rc))
        return rc;

    golomb::ScanOptions opt;
    opt.jobs = jobs;
    std::ofstream ckpt_out;
    std::optional<golomb::PiCheckpoint> resume;
    if (!resume_path.empty()) {
        resume = golomb::load_last_checkpoint(resume_path);
        if (resume && resume->n < from - 1)
            resume.reset(); // stale file from an earlier range: start over
        ckpt_out.open(resume_path, std::ios::app);
        if (!ckpt_out)
            return usage_error("cannot open checkpoint file " + resume_path);
        opt.on_checkpoint = [&ckpt_out](const golomb::PiCheckpoint& cp) {
            golomb::write_checkpoint(ckpt_out, cp);
            ckpt_out.flush();
        };
    }

    golomb::VerificationReport rep = golomb::run_scan(from, to, opt, false, resume);
    emit_points(rep.points, format);
    report_timing("scan", rep);
    if (!rep.failures.empty()) {
        for (const auto& f : rep.failures)
            std::cerr << "formula failure at n=" << f.n << ": pi=" << f.pi_n
                      << ", formula "
                      << (f.formula_val ? std::to_string(*f.formula_val)
                                        : std::string("absent"))
                      << '\n';
        return kExitMathFailure;
    }
    return kExitPass;
}

std::vector<golomb::TableRow> load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open fixture file " + path);
    std::vector<golomb::TableRow> rows;
    u64 n, pi_n;
    while (in >> n >> pi_n)
        rows.push_back({n, pi_n});
    if (!in.eof())
        throw std::invalid_argument("malformed fixture file " + path);
    return rows;
}

int cmd_verify_table(const std::string& fixture_path, unsigned jobs)
{
    std::vector<golomb::TableRow> fixture =
        fixture_path.empty()
            ? std::vector<golomb::TableRow>(golomb::kEmbeddedTable1.begin(),
                                            golomb::kEmbeddedTable1.end())
            : load_fixture(fixture_path);
    golomb::ScanOptions opt;
    opt.jobs = jobs;
    golomb::VerificationReport rep = golomb::verify_theorem3(67, 4000, opt);
    auto diffs = golomb::compare_with_table(rep.points, fixture);
    for (const auto& d : diffs)
        std::cout << d.describe() << '\n';
    std::size_t bad = 0;
    for (const auto& d : diffs)
        if (d.kind != golomb::TableDiff::Kind::extra_point)
            ++bad;
    std::cout << fixture.size() - bad << '/' << fixture.size() << " rows match\n";
    report_timing("verify-table", rep);
    return diffs.empty() ? kExitPass : kExitMathFailure;
}

int cmd_verify_bounds(u64 from, u64 to, unsigned jobs, bool force)
{
    int rc = kExitPass;
    if (!check_range(from, to, force, rc))
        return rc;
    golomb::ScanOptions opt;
    opt.jobs = jobs;
    golomb::VerificationReport rep = golomb::verify_bounds_range(from, to, opt);
    for (u64 n : rep.bounds_violations)
        std::cout << "violation at n=" << n << '\n';
    std::cout << rep.bounds_violations.size() << " violations\n";
    report_timing("verify-bounds", rep);
    return rep.bounds_violations.empty() ? kExitPass : kExitMathFailure;
}

int cmd_first_ratio(u64 k, u64 limit)
{
    std::optional<u64> hit = golomb::first_attainment(k, limit);
    if (!hit) {
        std::cerr << "no n <= " << limit << " with n = " << k << "*pi(n)\n";
        return kExitExhausted;
    }
    std::cout << *hit << '\n';
    return kExitPass;
}

int cmd_thresholds(u64 k_max)
{
    golomb::ThresholdTable table = golomb::build_thresholds(k_max);
    for (u64 k = 0; k <= table.k_max(); ++k)
        std::cout << k << ' ' << table.threshold(k) << '\n';
    return kExitPass;
}

template <class F>
double time_run(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0;
    return d.count();
}

int cmd_bench(u64 limit)
{
    u64 value = 0;
    double t = time_run([&] { value = golomb::pi_point(limit); });
    std::printf("pi_point(%llu) = %llu  %.3fs\n", static_cast<unsigned long long>(limit),
                static_cast<unsigned long long>(value), t);
    u64 streamed = 0;
    t = time_run([&] {
        golomb::pi_stream(golomb::PiCheckpoint{1, 0}, limit,
                          [&](golomb::PiCheckpoint cp) { streamed = cp.count; });
    });
    std::printf("pi_stream(%llu) = %llu  %.3fs\n", static_cast<unsigned long long>(limit),
                static_cast<unsigned long long>(streamed), t);
    if (limit > 67) {
        std::size_t points = 0;
        t = time_run([&] { points = golomb::verify_theorem3(67, limit).points.size(); });
        std::printf("scan [67, %llu): %zu points  %.3fs\n",
                    static_cast<unsigned long long>(limit), points, t);
    }
    return streamed == value ? kExitPass : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prime-count divisibility scanner and formula verifier"};
    app.require_subcommand(1);

    u64 pi_x = 0;
    CLI::App* sub_pi = app.add_subcommand("pi", "print pi(x)");
    sub_pi->add_option("x", pi_x, "point to count primes up to")
        ->required()
        ->check(CLI::PositiveNumber);

    u64 from = 0, to = 0, k = 0, limit = 0, k_max = 0;
    std::string format = "table";
    std::string resume_path;
    std::string fixture_path;
    unsigned jobs = 1;
    bool force = false;

    CLI::App* sub_scan = app.add_subcommand("scan", "list points with pi(n) dividing n");
    sub_scan->add_option("from", from)->required();
    sub_scan->add_option("to", to)->required();
    sub_scan->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub_scan->add_option("--jobs", jobs, "worker threads / shards")
        ->check(CLI::PositiveNumber);
    sub_scan->add_option("--resume", resume_path, "checkpoint file to continue from");
    sub_scan->add_flag("--force", force, "allow ranges beyond 1e9");

    CLI::App* sub_table = app.add_subcommand(
        "verify-table", "check the scan of [67, 4000) against the embedded table");
    sub_table->add_option("--table", fixture_path, "fixture file with `n pi` rows");
    sub_table->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    CLI::App* sub_bounds = app.add_subcommand(
        "verify-bounds", "check n/(ln n - 1/2) < pi(n) < n/(ln n - 3/2) on a range");
    sub_bounds->alias("bounds");
    sub_bounds->add_option("from", from)->required();
    sub_bounds->add_option("to", to)->required();
    sub_bounds->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sub_bounds->add_flag("--force", force, "allow ranges beyond 1e9");

    CLI::App* sub_first =
        app.add_subcommand("first-ratio", "least n with n = k*pi(n)");
    sub_first->add_option("k", k)->required()->check(CLI::Range(u64{2}, ~u64{0}));
    sub_first->add_option("--limit", limit, "search bound (inclusive)")->required();

    CLI::App* sub_thresholds = app.add_subcommand(
        "thresholds", "integer breakpoints of floor(ln n - 1/2)");
    sub_thresholds->add_option("k_max", k_max)->required()->check(CLI::PositiveNumber);

    CLI::App* sub_bench = app.add_subcommand("bench", "time the counting backends");
    u64 bench_limit = 10'000'000;
    sub_bench->add_option("--limit", bench_limit)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (sub_pi->parsed())
            return cmd_pi(pi_x);
        if (sub_scan->parsed())
            return cmd_scan(from, to, format, jobs, resume_path, force);
        if (sub_table->parsed())
            return cmd_verify_table(fixture_path, jobs);
        if (sub_bounds->parsed())
            return cmd_verify_bounds(from, to, jobs, force);
        if (sub_first->parsed())
            return cmd_first_ratio(k, limit);
        if (sub_thresholds->parsed())
            return cmd_thresholds(k_max);
        if (sub_bench->parsed())
            return cmd_bench(bench_limit);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::overflow_error& e) {
        return usage_error(e.what());
    } catch (const std::out_of_range& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kExitMathFailure;
    }
    return kExitUsage;
}
