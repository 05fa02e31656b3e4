#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace contactlab {

// Deterministic, platform-independent RNG (splitmix64). All randomized
// subroutines derive their stream from one top-level seed plus an operation
// tag, so a whole run is reproducible from a single integer.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Rejection-free modulo is fine here: streams
    // are short and n is tiny compared to 2^64.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// seed + operation tag -> child seed. Documented derivation: fnv1a64 of the
// tag xor'd into the seed, then one splitmix64 step.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    Rng r(seed ^ fnv1a64(tag));
    return r.next();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    return derive_seed(seed ^ (0x51a7b2e6d4c3f08bULL * (index + 1)), tag);
}

}  // namespace contactlab
