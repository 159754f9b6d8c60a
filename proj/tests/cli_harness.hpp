#pragma once
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef GOLOMB_CLI_PATH
#error "GOLOMB_CLI_PATH must point at the CLI binary"
#endif

// Spawns the real binary and captures its exit code and stdout. Diagnostics
// on stderr are discarded; the data stream is what the contracts are about.
namespace cli {

struct RunResult {
    int code = -1;
    std::string out;
};

inline std::string temp_path(const std::string& tag)
{
    static int serial = 0;
    return "/tmp/golomb_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
           std::to_string(serial++);
}

inline RunResult run(const std::string& args)
{
    std::string out_path = temp_path("stdout");
    std::string cmd =
        std::string(GOLOMB_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status))
        r.code = WEXITSTATUS(status);
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << content;
}

inline std::size_t count_lines(const std::string& text)
{
    std::size_t lines = 0;
    for (char c : text)
        lines += c == '\n';
    return lines;
}

} // namespace cli
