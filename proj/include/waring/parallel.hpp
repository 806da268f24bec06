#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace waring {

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into at most `jobs` contiguous blocks and runs
/// task(block, begin, end) for each, on its own thread when jobs > 1.
/// Returns the number of blocks used.
template <class Task>
std::size_t parallel_blocks(std::size_t n, unsigned jobs, Task&& task) {
    const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_jobs(jobs), n));
    const std::size_t step = (n + blocks - 1) / blocks;
    if (blocks == 1) {
        task(std::size_t{0}, std::size_t{0}, n);
        return 1;
    }
    std::vector<std::jthread> workers;
    workers.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t begin = std::min(n, b * step);
        const std::size_t end = std::min(n, begin + step);
        workers.emplace_back([&task, b, begin, end] { task(b, begin, end); });
    }
    return blocks;
}

}  // namespace waring
