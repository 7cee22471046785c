#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mtsp {

// Seedable generator shared by every stochastic operation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The distribution helpers below are implemented here rather than
// taken from <random> because the standard distributions are
// implementation-defined, and runs must replay bit-for-bit on any toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n)
    {
        std::uint64_t const bound = n;
        std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi)
    {
        return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo) + 1));
    }

    // Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates.
    template <class T> void shuffle(std::span<T> values)
    {
        for (std::size_t i = values.size(); i > 1; --i)
            std::swap(values[i - 1], values[index(i)]);
    }

    // Independent child stream; consumes one draw from this stream.
    Rng fork() { return Rng(next()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace mtsp
