#pragma once

#include <cstdint>
#include <string_view>

namespace cream {

// Finalizer of Vigna's splitmix64. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64 counter generator. The algorithm is pinned: schedules and
// corpora produced from a seed are a wire-format guarantee, so the stream
// must be reproducible bit-for-bit on any platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // 53-bit uniform in [0, 1).
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Inclusive uniform integer via modular mapping (rejection-free).
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + next() % (hi - lo + 1);
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

// Independent stream i of a run. Streams for distinct ids never share a
// counter window in practice (the golden-ratio stride is odd, the map from
// (seed, id) to the initial state is documented in the README).
inline constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (stream_id + 1)));
}

// Named sub-seed for a subcommand or task family ("kv:75:18", ...).
// FNV-1a over the domain string folded into the root seed.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view domain) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : domain) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return mix64(seed ^ h);
}

}  // namespace cream
