#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ldaroc {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer: a bijective avalanche mix of one 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Key of the independent stream number `index` under `seed`.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + kGoldenGamma));
}

// Counter-based generator: the k-th output of a stream is
// mix64(key + k * gamma), k = 1, 2, ..., which is exactly SplitMix64 seeded
// with `key`. Streams are addressed by (seed, index), so any draw can be
// regenerated without replaying earlier ones.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t index) noexcept
        : key_(stream_key(seed, index)) {}

    static StreamRng from_key(std::uint64_t key) noexcept {
        StreamRng rng(0, 0);
        rng.key_ = key;
        return rng;
    }

    std::uint64_t next_u64() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGoldenGamma);
    }

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; variates come in pairs and the second
    // one is cached.
    double next_normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        has_spare_ = true;
        return r * std::cos(angle);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ldaroc
