#pragma once

// Seeded randomness shared by the Monte Carlo simulator and the n-core
// growth model.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Seeds are expanded with SplitMix64 so that nearby user seeds and
// derived per-stream seeds give unrelated engines. The distribution helpers
// below are written out by hand because the std:: distributions are not
// reproducible across standard libraries.

#include <cmath>
#include <cstdint>
#include <random>

namespace mtasep {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
                          static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
        engine_.seed(seq);
    }

    /// Seed for the `stream`-th independent child of `seed`.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
        return splitmix64(s);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Exponential waiting time with the given rate.
    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's method with rejection).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mtasep
