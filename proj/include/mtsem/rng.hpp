#pragma once

#include <cstdint>
#include <vector>

#include "mtsem/errors.hpp"

namespace mtsem {

// SplitMix64 generator. Used everywhere randomness is needed so that results
// are identical across platforms and standard libraries; std::shuffle and
// std::uniform_*_distribution are implementation-defined and would break the
// byte-identical-output contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ArgumentError("SplitMix64::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

// Stable seed combiner for deriving independent streams, e.g. per-run seeds
// from a master seed. A SplitMix64 step over (a + C*(b+1)) so that mixing is
// not the identity for b = 0.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a + 0x9E3779B97F4A7C15ULL * (b + 1));
    return g.next();
}

// Fisher-Yates shuffle with an explicit generator.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

// k distinct indices drawn uniformly from [0, n), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, SplitMix64& rng);

}  // namespace mtsem
