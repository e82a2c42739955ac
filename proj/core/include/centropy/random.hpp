#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace centropy {

// SplitMix64 finalizer. Spreads structured seed material (base seed plus
// replicate index) across the full 64-bit space.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// A self-contained random stream: a fully specified engine (mt19937_64)
// plus the uniform/normal helpers the samplers are built on. Every Monte
// Carlo replicate owns the stream derived from (base_seed, replicate index),
// which makes results independent of worker count and scheduling order.
//
// The engine and all variate transforms are pinned by this library (no
// implementation-defined std:: distributions), so equal seeds give
// bit-identical draws on any platform.
class random_stream {
public:
    explicit random_stream(std::uint64_t seed) : engine_(seed) {}

    static random_stream for_replicate(std::uint64_t base_seed, std::uint64_t index) {
        return random_stream(mix64(base_seed + 0x9e3779b97f4a7c15ull * (index + 1)));
    }

    // Uniform on the open interval (0, 1); endpoints are never returned.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via the Marsaglia polar method; the spare deviate is
    // cached, so draws come in cheap pairs.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace centropy
