#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace wdist::detail {

inline unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) on each and
/// returns the partial results in chunk order so merges are deterministic.
template <class Fn>
auto map_chunks(std::uint64_t count, unsigned workers, Fn&& fn) {
    using Partial = decltype(fn(std::uint64_t{0}, std::uint64_t{0}));
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_workers(workers), count));
    std::vector<Partial> out;
    out.reserve(chunks);
    if (chunks == 1) {
        out.push_back(fn(std::uint64_t{0}, count));
        return out;
    }
    std::vector<std::future<Partial>> futures;
    futures.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = count * c / chunks;
        const std::uint64_t end = count * (c + 1) / chunks;
        futures.push_back(std::async(std::launch::async, [&fn, begin, end] { return fn(begin, end); }));
    }
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace wdist::detail
