#ifndef COLLAPSAR_RNG_HPP
#define COLLAPSAR_RNG_HPP

#include <cstdint>
#include <random>

namespace collapsar {

// Reproducibility contract, fixed for all experiments:
//  * streams are std::mt19937_64 (its raw 64-bit output sequence is fully
//    specified by the standard, so results are identical across platforms);
//  * derived seeds come from the splitmix64 finalizer below, so a base seed
//    splits into independent per-trial seeds without any shared state;
//  * bounded draws use rejection sampling on the raw stream, never
//    std::uniform_int_distribution (whose mapping is implementation-defined).

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer (Steele/Lea/Flood).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed for stream `index` derived from `base`: splitmix64(base + (index+1)*gamma).
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + (index + 1) * kSplitMix64Gamma);
}

/// Seedable deterministic RNG with portable bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform integer in [0, n). Unbiased via rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace collapsar

#endif
