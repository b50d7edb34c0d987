#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace sombor {

/// Worker count: SOMBOR_THREADS (integer >= 1) when set, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SOMBOR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Applies fn to indices 0..count-1 and feeds the results to consume in
/// index order. Work is processed in bounded batches so memory stays
/// proportional to the batch, not the corpus.
template <class Result, class Fn, class Consume>
void parallel_map_ordered(std::size_t count, unsigned threads, Fn&& fn, Consume&& consume) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 256) {
        for (std::size_t i = 0; i < count; ++i) consume(i, fn(i));
        return;
    }
    const std::size_t batch = std::max<std::size_t>(1024, static_cast<std::size_t>(threads) * 4096);
    std::vector<Result> slots;
    for (std::size_t start = 0; start < count; start += batch) {
        const std::size_t end = std::min(count, start + batch);
        slots.resize(end - start);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = start + t; i < end; i += threads)
                    slots[i - start] = fn(i);
            });
        }
        for (auto& th : pool) th.join();
        for (std::size_t i = start; i < end; ++i) consume(i, std::move(slots[i - start]));
    }
}

} // namespace sombor
