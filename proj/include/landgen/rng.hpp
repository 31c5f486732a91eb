#pragma once

#include <cstdint>
#include <string_view>

namespace landgen {

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Keyed SplitMix64 stream: draw n is mix64(key + n * golden gamma), so the
/// stream is a pure function of (key, n). Child streams derive their key from
/// the parent key and a label, which keeps draws for one parameter group
/// independent of how many groups exist.
class RandomStream {
public:
    static constexpr std::string_view kAlgorithm = "splitmix64-keyed/fnv1a64";

    RandomStream(std::uint64_t seed, std::string_view label) noexcept : key_(mix64(mix64(seed) ^ fnv1a64(label))) {}

    RandomStream child(std::string_view label) const noexcept { return RandomStream(key_, label, Derived{}); }

    std::uint64_t next() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept;

    /// Uniform on (lo, hi].
    double uniform_left_open(double lo, double hi) noexcept;

    /// Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) noexcept;

    /// Uniform integer on [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) noexcept;

    bool bernoulli(double p) noexcept { return uniform01() < p; }

private:
    struct Derived {};
    RandomStream(std::uint64_t parent, std::string_view label, Derived) noexcept
        : key_(mix64(parent ^ fnv1a64(label))) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace landgen
