#pragma once
#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "golomb/base.hpp"
#include "golomb/formula.hpp"

namespace golomb {

inline constexpr std::string_view kScanCsvHeader =
    "n,pi,ratio,floor_k,theorem3,table_variant,theorem3_match";

namespace detail {

inline u64 parse_u64_field(std::string_view s)
{
    u64 v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::runtime_error("scan record: malformed numeric field");
    return v;
}

inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

// table_variant_match is not serialized; it is derivable and only defined
// from 67 up, matching how points are built.
inline void restore_variant_match(GolombPoint& p)
{
    if (p.n >= kBoundsDomainStart)
        p.table_variant_match = p.table_variant_val == p.pi_n;
}

} // namespace detail

inline void write_scan_csv(std::ostream& os, const std::vector<GolombPoint>& points)
{
    os << kScanCsvHeader << '\n';
    for (const GolombPoint& p : points) {
        os << p.n << ',' << p.pi_n << ',' << p.k << ',' << p.floor_val << ',';
        if (p.theorem3_val)
            os << *p.theorem3_val;
        os << ',' << p.table_variant_val << ',';
        if (p.theorem3_match)
            os << (*p.theorem3_match ? "true" : "false");
        os << '\n';
    }
}

inline std::vector<GolombPoint> parse_scan_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("scan CSV: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kScanCsvHeader)
        throw std::runtime_error("scan CSV: unexpected header");
    std::vector<GolombPoint> out;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto f = detail::split_fields(line);
        if (f.size() != 7)
            throw std::runtime_error("scan CSV: wrong field count");
        GolombPoint p;
        p.n = detail::parse_u64_field(f[0]);
        p.pi_n = detail::parse_u64_field(f[1]);
        p.k = detail::parse_u64_field(f[2]);
        p.floor_val = detail::parse_u64_field(f[3]);
        if (!f[4].empty())
            p.theorem3_val = detail::parse_u64_field(f[4]);
        p.table_variant_val = detail::parse_u64_field(f[5]);
        if (!f[6].empty()) {
            if (f[6] != "true" && f[6] != "false")
                throw std::runtime_error("scan CSV: malformed boolean field");
            p.theorem3_match = f[6] == "true";
        }
        detail::restore_variant_match(p);
        out.push_back(p);
    }
    return out;
}

inline void write_scan_json(std::ostream& os, const std::vector<GolombPoint>& points)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const GolombPoint& p : points) {
        nlohmann::ordered_json o;
        o["n"] = p.n;
        o["pi"] = p.pi_n;
        o["ratio"] = p.k;
        o["floor_k"] = p.floor_val;
        if (p.theorem3_val)
            o["theorem3"] = *p.theorem3_val;
        else
            o["theorem3"] = nullptr;
        o["table_variant"] = p.table_variant_val;
        if (p.theorem3_match)
            o["theorem3_match"] = *p.theorem3_match;
        else
            o["theorem3_match"] = nullptr;
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

inline std::vector<GolombPoint> parse_scan_json(std::istream& is)
{
    nlohmann::json arr = nlohmann::json::parse(is);
    if (!arr.is_array())
        throw std::runtime_error("scan JSON: expected an array");
    std::vector<GolombPoint> out;
    for (const auto& o : arr) {
        GolombPoint p;
        p.n = o.at("n").get<u64>();
        p.pi_n = o.at("pi").get<u64>();
        p.k = o.at("ratio").get<u64>();
        p.floor_val = o.at("floor_k").get<u64>();
        if (!o.at("theorem3").is_null())
            p.theorem3_val = o.at("theorem3").get<u64>();
        p.table_variant_val = o.at("table_variant").get<u64>();
        if (!o.at("theorem3_match").is_null())
            p.theorem3_match = o.at("theorem3_match").get<bool>();
        detail::restore_variant_match(p);
        out.push_back(p);
    }
    return out;
}

inline void write_scan_table(std::ostream& os, const std::vector<GolombPoint>& points)
{
    os << std::setw(10) << "n" << std::setw(10) << "pi" << std::setw(7) << "ratio"
       << std::setw(9) << "floor_k" << std::setw(10) << "theorem3" << std::setw(14)
       << "table_variant" << std::setw(16) << "theorem3_match" << '\n';
    for (const GolombPoint& p : points) {
        os << std::setw(10) << p.n << std::setw(10) << p.pi_n << std::setw(7) << p.k
           << std::setw(9) << p.floor_val << std::setw(10)
           << (p.theorem3_val ? std::to_string(*p.theorem3_val) : std::string("-"))
           << std::setw(14) << p.table_variant_val << std::setw(16)
           << (p.theorem3_match ? (*p.theorem3_match ? "true" : "false") : "-") << '\n';
    }
}

} // namespace golomb
