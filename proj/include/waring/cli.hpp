#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace waring::cli {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    std::string command;
    std::optional<int> d;
    std::string scheme = "main";
    std::string format = "json";
    /// 0 means one worker per hardware thread.
    unsigned jobs = 0;
    std::optional<std::uint64_t> prime;
    std::optional<std::string> out;
    std::uint64_t seed = 0;
    bool full = false;
    bool force = false;
    /// expand, stream or both; used by verify.
    std::string mode = "expand";
    bool timings = false;
    std::size_t samples = 1000;
};

struct RunResult {
    /// 0 verified, 1 mathematical failure, 2 usage error.
    int exit_code = 0;
    std::string output;
    std::string diagnostics;
};

RunResult run(const RunConfig& config);

std::string usage();

}  // namespace waring::cli
