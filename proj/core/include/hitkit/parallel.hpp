#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace hitkit {

// Process-wide cap on worker threads used by the verifiers and the oracle.
// Defaults to 1 (sequential).
void set_worker_limit(unsigned workers);
unsigned worker_limit();

// Least index i in [0, count) with pred(i) true. Results do not depend on the
// worker count.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, Pred pred) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_limit(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::size_t> best{count};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count && i < best.load(std::memory_order_relaxed); i += workers) {
                if (pred(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    const std::size_t found = best.load();
    if (found == count) return std::nullopt;
    return found;
}

}  // namespace hitkit
