#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace twodom {

// Deterministic 64-bit generator for every randomized piece of the toolkit.
// std::mt19937_64's output sequence is fixed by the standard; the bounded
// draws below deliberately avoid std::uniform_int_distribution, whose output
// differs between standard library implementations, so seeds and golden
// snapshots survive toolchain changes.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform integer in [lo, hi], endpoints included
    int64_t uniform(int64_t lo, int64_t hi) {
        assert(lo <= hi);
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next_u64());  // full range
        // rejection sampling to kill modulo bias
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int64_t>(x % span);
    }

    double uniform01() {  // 53-bit mantissa in [0,1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return uniform01() < p; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        assert(!v.empty());
        return v[static_cast<size_t>(uniform(0, static_cast<int64_t>(v.size()) - 1))];
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// splitmix64 step; used to derive independent per-instance streams from one seed
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace twodom
