#pragma once

#include <cstdint>
#include <utility>

namespace cubpart::rng {

// Deterministic, platform-independent pseudo-random streams.  Every cost
// entry (and every sampled point) gets its own substream keyed by
// (seed, tag, index) through two rounds of the splitmix64 finalizer, so
// instances are reproducible regardless of generation order.

inline std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t tag, std::uint64_t index)
{
    std::uint64_t k = mix64(seed + 0x9E3779B97F4A7C15ULL * (tag + 1));
    return mix64(k + 0x9E3779B97F4A7C15ULL * (index + 1));
}

struct SplitMix64
{
    std::uint64_t state = 0;

    std::uint64_t next()
    {
        state += 0x9E3779B97F4A7C15ULL;
        return mix64(state);
    }
};

inline constexpr std::uint64_t kTagPairCost = 1;
inline constexpr std::uint64_t kTagTripleCost = 2;
inline constexpr std::uint64_t kTagPoint = 3;

class Substream
{
public:
    Substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index)
        : gen_{substream_key(seed, tag, index)}
    {
    }

    /// Uniform in (0, 1].
    double uniform01()
    {
        return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one draw per call.
    double normal() { return normal_pair().first; }

    std::pair<double, double> normal_pair();

private:
    SplitMix64 gen_;
};

} // namespace cubpart::rng
