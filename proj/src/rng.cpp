#include "mtsem/rng.hpp"

#include <numeric>

namespace mtsem {

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                    SplitMix64& rng) {
    if (k > n) throw ArgumentError("sample_without_replacement: k exceeds n");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    // Partial Fisher-Yates: after i swaps the first i entries are the sample.
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace mtsem
