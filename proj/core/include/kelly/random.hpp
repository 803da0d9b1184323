#pragma once

#include <cstdint>
#include <random>

namespace kelly {

// splitmix64 finalizer applied to (seed, stream); used to derive independent
// per-path seeds from one user seed without depending on execution order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Seeded generator owned by a single caller. Two states built from the same
// seed produce the same sequence on every platform: the engine is
// std::mt19937_64 and the conversion to doubles is done here, not by a
// std::*_distribution.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed) : engine_(seed) {}

    static RandomState substream(std::uint64_t seed, std::uint64_t stream) {
        return RandomState(mix_seed(seed, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1], 53-bit resolution.
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace kelly
