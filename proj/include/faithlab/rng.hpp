#ifndef FAITHLAB_RNG_HPP
#define FAITHLAB_RNG_HPP

#include <cstdint>

namespace faithlab {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Deterministic 64-bit stream (splitmix64). The standard library's
// uniform_int_distribution is implementation-defined, so seeded reports
// would not reproduce across toolchains; this generator is fully pinned.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Unbiased draw in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

// Fixed splitting rule: the sub-seed of draw `index` under `seed`.
// Order-independent, so parallel and serial experiment runs see
// identical per-draw streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace faithlab

#endif
