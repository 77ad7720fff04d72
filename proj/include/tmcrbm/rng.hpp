#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace tmcrbm {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ generator. Chosen over std::mt19937_64 because its full
/// state is four words, which makes persistent-chain checkpoints trivial
/// to serialize bit-exactly.
class Rng {
public:
    Rng() : Rng(0) {}

    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    std::uint64_t next() {
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

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller. Always consumes exactly two uniforms,
    /// so the stream position stays predictable.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    const std::array<std::uint64_t, 4>& state() const { return state_; }
    void set_state(const std::array<std::uint64_t, 4>& s) { state_ = s; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives an independent stream seed from (master seed, module tag, chain
/// index). Every Monte Carlo chain in the project gets its generator from
/// here, which is what makes results independent of thread count.
inline std::uint64_t derive_stream(std::uint64_t master, std::string_view tag,
                                   std::uint64_t index) {
    std::uint64_t x = index;
    std::uint64_t h = splitmix64(x) ^ fnv1a64(tag);
    std::uint64_t y = h;
    std::uint64_t m = splitmix64(y) ^ master;
    return splitmix64(m);
}

inline Rng make_stream(std::uint64_t master, std::string_view tag,
                       std::uint64_t index) {
    return Rng(derive_stream(master, tag, index));
}

}  // namespace tmcrbm
