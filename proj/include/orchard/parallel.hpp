#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace orchard {

/// Resolves a requested worker count: values < 1 mean "pick a default"
/// (the ORCHARD_THREADS environment variable if set, else the hardware
/// concurrency). Always returns at least 1.
inline int resolve_thread_count(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("ORCHARD_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Runs worker(chunk_index, begin, end) over a fixed partition of [0, n)
/// into `threads` contiguous chunks. The partition depends only on n and
/// threads, so deterministic reductions can merge per-chunk results in
/// chunk order regardless of scheduling.
template <class Worker>
void for_chunks(long long n, int threads, Worker&& worker) {
    threads = std::max(1, threads);
    if (n <= 0) return;
    if (threads == 1 || n < 2 * threads) {
        worker(0, 0LL, n);
        return;
    }
    std::vector<std::thread> pool;
    const long long base = n / threads, extra = n % threads;
    long long begin = 0;
    for (int t = 0; t < threads; ++t) {
        const long long len = base + (t < extra ? 1 : 0);
        pool.emplace_back(
            [&worker, t, begin, len] { worker(t, begin, begin + len); });
        begin += len;
    }
    for (auto& th : pool) th.join();
}

} // namespace orchard
