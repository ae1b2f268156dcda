#pragma once

#include <cstdint>

namespace charex {

// Stateless counter-based generator. Every draw is a pure function of
// (seed, index, stream), so partitioning the index space across workers
// cannot change the output, and a seed fully determines a sample run.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t index, std::uint64_t stream = 0) const {
        std::uint64_t h = fmix64(seed_ ^ 0x9e3779b97f4a7c15ULL);
        h = fmix64(h ^ (index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
        h = fmix64(h ^ (stream + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
        return h;
    }

    // Uniform on (0, 1]; never 0, so -log(u) stays finite.
    double uniform01(std::uint64_t index, std::uint64_t stream = 0) const {
        return static_cast<double>((bits(index, stream) >> 11) + 1) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

    // 64-bit finalizer (MurmurHash3).
    static std::uint64_t fmix64(std::uint64_t k) {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        k *= 0xc4ceb9fe1a85ec53ULL;
        k ^= k >> 33;
        return k;
    }

private:
    std::uint64_t seed_;
};

}  // namespace charex
