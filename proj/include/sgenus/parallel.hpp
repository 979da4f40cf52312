#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sgenus {

inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SGENUS_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, n), split into contiguous chunks across threads.
// body must only write to per-index slots so the result is deterministic.
template <class F>
void parallel_for(std::int64_t n, int jobs, F&& body) {
    if (n <= 0) return;
    std::int64_t workers = std::min<std::int64_t>(std::max(jobs, 1), n);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::int64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (std::int64_t w = 0; w < workers; ++w) {
        std::int64_t lo = w * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&body, lo, hi] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace sgenus
