// Counter-based deterministic random numbers.
//
// Every stochastic object in the library derives from a single 64-bit seed via
// a stateless counter hash (splitmix64 over seed and counter). The same
// (seed, counter) pair produces the same value on every platform, so generated
// fields are reproducible bit-for-bit without any shared-generator ordering
// concerns.
#pragma once

#include <cstdint>

namespace frit {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t raw(std::uint64_t counter) const {
        // Two mixing rounds decorrelate (seed, counter) lattice structure.
        return detail::splitmix64(detail::splitmix64(seed_ ^ 0xA5A5A5A55A5A5A5AULL) + counter);
    }

    // Uniform in [0, 1): top 53 bits of the hash.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(raw(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [-1, 1).
    double symmetric(std::uint64_t counter) const { return 2.0 * uniform(counter) - 1.0; }

    // Uniform in [lo, hi).
    double range(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace frit
