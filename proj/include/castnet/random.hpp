/*
 * random.hpp
 *
 * Seeded generator with a fully specified output sequence: std::mt19937_64
 * is pinned by the standard, and bounded draws / shuffles are done here
 * rather than through the implementation-defined std distributions.
 */

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace castnet {

using Seed = std::uint64_t;

class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection on the top of the range keeps the draw unbiased.
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform real in [0, 1).
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace castnet
