#ifndef PALEYLAB_RNG_HPP
#define PALEYLAB_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace paleylab {

// splitmix64. All seeded randomness in the toolkit flows through this
// generator so that reports are reproducible across platforms and
// implementations; the exact recurrence is documented in the README.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Reduction by modulo: the tiny bias is irrelevant here and the
    // simplicity keeps the trial streams easy to re-derive elsewhere.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // k distinct values from [0, n), sorted ascending (partial Fisher-Yates
    // on an index vector, then sort).
    std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

  private:
    std::uint64_t state_;
};

} // namespace paleylab

#endif
