/*
 * parallel.hpp
 *
 * Deterministic per-source reduction. Sources are cut into fixed-size blocks;
 * each block is folded sequentially into its own accumulator and the block
 * accumulators are summed in block order, so the floating-point result is the
 * same for any worker count.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace castnet::detail {

inline constexpr std::size_t source_block = 32;

template <typename PerSource>
std::vector<double> reduce_sources(std::size_t sources, std::size_t width, unsigned threads,
                                   PerSource&& per_source) {
    const std::size_t blocks = (sources + source_block - 1) / source_block;
    std::vector<std::vector<double>> partial(blocks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks) return;
            std::vector<double> acc(width, 0.0);
            const std::size_t end = std::min(sources, (b + 1) * source_block);
            for (std::size_t s = b * source_block; s < end; ++s) per_source(s, acc);
            partial[b] = std::move(acc);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    std::vector<double> total(width, 0.0);
    for (const auto& acc : partial) {
        for (std::size_t i = 0; i < width; ++i) total[i] += acc[i];
    }
    return total;
}

} // namespace castnet::detail
