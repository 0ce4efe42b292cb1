#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace annulus {

// SplitMix64 finalizer. Used both as the generator step and as the mixing
// function for deriving substreams, so every stream is a pure function of
// the integers that name it.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream: state advances by a fixed odd constant, output is the
// finalizer of the counter. Substreams are derived by hashing, never by
// splitting state, so results are independent of evaluation order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t state = 0) : state_(state) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; second value of each pair is cached.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - next_double();  // (0, 1]
        double u2 = next_double();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Derives a stream from a seed and a list of integer labels by folding each
// label through the finalizer: h = mix64(h ^ mix64(label)).
inline RandomStream derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t label : labels) h = mix64(h ^ mix64(label));
    return RandomStream(h);
}

}  // namespace annulus
