#ifndef EVOSHAPES_RNG_HPP
#define EVOSHAPES_RNG_HPP

#include <cstdint>

namespace evoshapes {

// Deterministic random stream (splitmix64). The standard <random>
// distributions are implementation-defined, so draws are done by hand to
// keep runs bit-reproducible across compilers and standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    // Independent stream derived from a master seed and two indices,
    // e.g. (generation, parent). Equal inputs give equal streams.
    static RandomStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = mix(master);
        s = mix(s ^ (a + 0x9e3779b97f4a7c15ULL));
        s = mix(s ^ (b + 0x517cc1b727220a95ULL));
        return RandomStream(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Unbiased draw in [0, bound), bound >= 1.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Inclusive integer range [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform_u64(static_cast<std::uint64_t>(hi) - lo + 1));
    }

    // [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_real(double lo, double hi) {
        return lo + uniform_double() * (hi - lo);
    }

    bool bernoulli(double p) {
        return uniform_double() < p;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace evoshapes

#endif
