#ifndef LEOLORA_RNG_HPP
#define LEOLORA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace leolora {

// Deterministic 64-bit generator (splitmix64). All randomness in the
// simulator flows through this class so that runs are bit-reproducible
// across platforms; std::random distributions are implementation-defined
// and must not be used.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller. Consumes exactly two draws per call,
    // no caching, so the stream position is predictable.
    double gaussian()
    {
        double u1 = 1.0 - uniform01(); // (0, 1], keeps log() finite
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::uint64_t state_;
};

// Named substreams: each (base seed, replication, purpose) tuple owns an
// independent stream, so toggling one scenario knob does not perturb the
// draws of an unrelated one.
enum class StreamPurpose : std::uint64_t {
    placement = 1,
    shadowing = 2,
    phases = 3,
    channels = 4,
    fuzz = 5,
};

inline std::uint64_t avalanche64(std::uint64_t z)
{
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
    return z ^ (z >> 33);
}

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication,
                                 StreamPurpose purpose)
{
    std::uint64_t z = avalanche64(base_seed + 0x9E3779B97F4A7C15ull);
    z = avalanche64(z ^ (replication + 0xBF58476D1CE4E5B9ull));
    z = avalanche64(z ^ (static_cast<std::uint64_t>(purpose) + 0x94D049BB133111EBull));
    return z;
}

inline RandomStream substream(std::uint64_t base_seed, std::uint64_t replication,
                              StreamPurpose purpose)
{
    return RandomStream(derive_seed(base_seed, replication, purpose));
}

} // namespace leolora

#endif
