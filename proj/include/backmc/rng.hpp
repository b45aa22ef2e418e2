#pragma once

#include <cstdint>

#include "backmc/math.hpp"

namespace backmc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Collapses (seed, stream ids...) into one well-mixed 64-bit value, so that
/// every (path, stratum, ...) combination gets its own independent stream and
/// results do not depend on thread scheduling.
inline std::uint64_t derive_stream(std::uint64_t seed) { return seed; }

template <typename... Rest>
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t next, Rest... rest) {
    std::uint64_t s = seed ^ (next + 0x9e3779b97f4a7c15ULL);
    s = splitmix64(s);
    return derive_stream(s, rest...);
}

/// xoshiro256++ seeded through splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    template <typename... Ids>
    static Rng stream(std::uint64_t seed, Ids... ids) {
        return Rng(derive_stream(seed, static_cast<std::uint64_t>(ids)...));
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

    /// Uniform on the open interval (0,1); never returns an endpoint.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal by inverse-CDF, one uniform per draw.
    double normal() { return norm_quantile(uniform()); }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next_u64(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace backmc
