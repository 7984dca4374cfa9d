#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace profilekit {

// Thin wrapper over mt19937_64. The standard distributions are not pinned
// across implementations, so ranged draws go through this class to keep
// outputs identical for a given seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) // inclusive
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t numerator, std::uint64_t denominator)
    {
        return below(denominator) < numerator;
    }

    // k distinct values from 1..n, sorted.
    std::vector<int> sample_subset(int n, int k);

private:
    std::mt19937_64 engine_;
};

} // namespace profilekit
