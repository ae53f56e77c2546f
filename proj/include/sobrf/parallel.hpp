#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sobrf {

/// Runs f(i) for i in [0, n) on up to n_threads workers. Results must be
/// written to pre-allocated, index-disjoint storage so the output is
/// independent of scheduling order.
template <class F>
void parallel_for(std::size_t n, F&& f, unsigned n_threads = 0) {
    if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
    if (n_threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(n_threads, n));
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace sobrf
