#pragma once
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "golomb/base.hpp"

namespace golomb {

// A resumable prime-count state: count = pi(n).
struct PiCheckpoint {
    u64 n = 0;
    u64 count = 0;

    friend bool operator==(const PiCheckpoint&, const PiCheckpoint&) = default;
};

// Checkpoint file format: one "n<TAB>count\n" line per checkpoint, ASCII decimal.

inline void write_checkpoint(std::ostream& os, const PiCheckpoint& cp)
{
    os << cp.n << '\t' << cp.count << '\n';
}

inline std::optional<PiCheckpoint> parse_checkpoint_line(std::string_view line)
{
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
        return std::nullopt;
    PiCheckpoint cp;
    const char* b1 = line.data();
    auto r1 = std::from_chars(b1, b1 + tab, cp.n);
    if (r1.ec != std::errc{} || r1.ptr != b1 + tab)
        return std::nullopt;
    const char* b2 = line.data() + tab + 1;
    const char* e2 = line.data() + line.size();
    auto r2 = std::from_chars(b2, e2, cp.count);
    if (r2.ec != std::errc{} || r2.ptr != e2)
        return std::nullopt;
    return cp;
}

// Reads the final checkpoint of a stream. A malformed last line is treated as a
// torn write and ignored; a malformed line anywhere else means the file is corrupt.
inline std::optional<PiCheckpoint> last_checkpoint(std::istream& is)
{
    std::optional<PiCheckpoint> last;
    bool pending_bad = false;
    std::string line;
    while (std::getline(is, line)) {
        if (pending_bad)
            throw std::runtime_error("corrupt checkpoint file: malformed interior line");
        if (line.empty())
            continue;
        auto cp = parse_checkpoint_line(line);
        if (cp)
            last = cp;
        else
            pending_bad = true;
    }
    return last;
}

inline std::optional<PiCheckpoint> load_last_checkpoint(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    return last_checkpoint(in);
}

} // namespace golomb
