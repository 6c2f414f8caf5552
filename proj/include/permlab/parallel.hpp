#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace permlab {

// Static contiguous split of [0, total) across `threads` workers. Results
// must be written to per-index slots so the outcome is independent of the
// worker count.
inline void parallel_chunks(long total, int threads,
                            const std::function<void(long, long)>& body) {
    if (threads <= 1 || total < 2) {
        body(0, total);
        return;
    }
    const long k = std::min<long>(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(k));
    const long base = total / k, extra = total % k;
    long lo = 0;
    for (long t = 0; t < k; ++t) {
        const long hi = lo + base + (t < extra ? 1 : 0);
        pool.emplace_back(body, lo, hi);
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

} // namespace permlab
