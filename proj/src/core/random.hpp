#pragma once

#include <cstdint>

namespace rhgen {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based random stream: the value at a given counter depends only on
/// (seed, stream, counter), never on call order. Used wherever results must
/// not depend on how work is split across threads.
class CounterStream {
public:
    constexpr CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

    constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
        return mix64(key_ ^ mix64(counter));
    }

    /// Uniform double in [0, 1).
    constexpr double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

// Stream identifiers. Distinct streams of one seed are independent.
namespace streams {
inline constexpr std::uint64_t kAngular = 1;
inline constexpr std::uint64_t kRadial = 2;
inline constexpr std::uint64_t kTauPhi = 3;
inline constexpr std::uint64_t kTauR = 4;
inline constexpr std::uint64_t kMoveSubset = 5;
} // namespace streams

} // namespace rhgen
