#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lumen {

// Worker count: LUMEN_THREADS caps it, hardware concurrency otherwise.
inline int worker_count() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("LUMEN_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) n = static_cast<int>(v);
        }
        return n;
    }();
    return cached;
}

// Runs fn(i) for i in [0, n). Indices are split into contiguous chunks, one
// per worker; every index writes only its own outputs, so results do not
// depend on the worker count.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lumen
