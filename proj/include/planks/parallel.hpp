#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace planks {

inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4u : hw;
}

/// Runs fn(i) for i in [0, n). Each index must write only to its own output
/// slot; with per-index seeding the result is independent of the worker count.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                         unsigned workers = 0) {
    if (n <= 0) return;
    if (workers == 0) workers = default_workers();
    if (workers > static_cast<unsigned>(n)) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::int64_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace planks
