#pragma once

// Range-parallel helpers. Work is split into disjoint chunks processed by
// plain std::threads; results are merged in chunk order, so the outcome is
// identical for any thread count.

#include <algorithm>
#include <thread>
#include <vector>

#include "octoform/arith.hpp"

namespace octoform {

inline int default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

struct Chunk {
    i64 lo; // inclusive
    i64 hi; // exclusive
};

inline std::vector<Chunk> split_range(i64 lo, i64 hi, int parts) {
    std::vector<Chunk> chunks;
    if (hi <= lo || parts <= 0) return chunks;
    i64 total = hi - lo;
    i64 n = std::min<i64>(parts, total);
    for (i64 i = 0; i < n; ++i) {
        i64 a = lo + total * i / n;
        i64 b = lo + total * (i + 1) / n;
        if (a < b) chunks.push_back({a, b});
    }
    return chunks;
}

// Runs fn(chunk_index, lo, hi) over disjoint chunks of [lo, hi).
// fn must only write to per-chunk state.
template <typename Fn>
void parallel_chunks(i64 lo, i64 hi, int threads, Fn&& fn) {
    auto chunks = split_range(lo, hi, std::max(1, threads));
    if (chunks.size() <= 1) {
        for (size_t i = 0; i < chunks.size(); ++i)
            fn(i, chunks[i].lo, chunks[i].hi);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks.size());
    for (size_t i = 0; i < chunks.size(); ++i)
        pool.emplace_back([&, i] { fn(i, chunks[i].lo, chunks[i].hi); });
    for (auto& t : pool) t.join();
}

// Sorted union of per-chunk ascending violation lists.
inline std::vector<i64> merge_sorted(std::vector<std::vector<i64>>& parts) {
    std::vector<i64> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace octoform
