#pragma once

#include <cstdint>

namespace gibbs {

// Splittable pseudo-random stream: xoshiro256++ seeded through SplitMix64
// from a (seed, stream) pair. Identical (seed, stream) reproduces an
// identical draw sequence on every platform; the standard-library engines
// give no such guarantee, so everything here is self-contained.
//
// Sub-streams are derived by hashing the parent stream id with an index.
// Monte Carlo drivers hand one sub-stream to each fixed-size chunk, which
// keeps results independent of the worker count.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {
        std::uint64_t x = seed ^ mix64(stream + 0x9E3779B97F4A7C15ull);
        for (auto& word : state_) word = splitmix64(x);
        // xoshiro must not start from the all-zero state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Deterministic child stream; independent of draws made so far.
    RngStream substream(std::uint64_t index) const {
        return RngStream(seed_, mix64(stream_ * 0xD1342543DE82EF95ull + index + 1));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0, 1); safe under log().
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
        return z ^ (z >> 33);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_[4];
};

double sample_exponential(RngStream& rng);
double sample_normal(RngStream& rng);
// Marsaglia-Tsang; any shape > 0, unit scale.
double sample_gamma(double shape, RngStream& rng);
double sample_beta(double a, double b, RngStream& rng);

}  // namespace gibbs
