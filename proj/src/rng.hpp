#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace relgrid {

// splitmix64 finalizer; good avalanche, used for seed derivation everywhere
// so that layout/episode seeds are stable across platforms.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_seed(uint64_t global_seed, uint64_t a, uint64_t b) {
    return mix64(mix64(global_seed ^ 0x8c6e1d2fb7a35941ULL) ^ mix64(a + 1) ^ (mix64(b + 1) << 1));
}

inline uint64_t hash_str(uint64_t seed, const char* s) {
    uint64_t h = 0xcbf29ce484222325ULL ^ seed;
    for (; *s; ++s) h = (h ^ (uint8_t)*s) * 0x100000001b3ULL;
    return mix64(h);
}

// Thin wrapper around mt19937_64 with hand-rolled draws. std::*_distribution
// sequences are implementation-defined; these are not.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform in [0, n)
    int next_int(int n) { return (int)(eng_() % (uint64_t)n); }

    // uniform in [0, 1)
    double next_double() { return (double)(eng_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = (size_t)next_int((int)i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace relgrid
