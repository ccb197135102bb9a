// rng.hpp -- deterministic random source and seed derivation.
//
// All randomness in the project flows through Rng so that identical seeds
// give identical artifacts on any platform. std::mt19937_64 is fully
// specified by the standard; the uniform helpers below avoid the standard
// distribution classes, whose output is implementation-defined.
#pragma once

#include <cstdint>
#include <random>

namespace idnc {

// splitmix64 finalizer; used to mix structured inputs into stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed for a (parent, a, b) coordinate, e.g. (master seed,
// sweep value, trial index). Order-sensitive by construction.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = splitmix64(parent ^ 0x6a09e667f3bcc909ULL);
    h = splitmix64(h ^ splitmix64(a));
    h = splitmix64(h ^ splitmix64(b));
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return double(gen_() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, bound). Modulo bias is negligible for the small bounds
    // used here and keeps the draw sequence platform-stable.
    int next_below(int bound) { return int(gen_() % std::uint64_t(bound)); }

    // Uniform in [lo, hi] inclusive.
    int next_between(int lo, int hi) { return lo + next_below(hi - lo + 1); }

private:
    std::mt19937_64 gen_;
};

}  // namespace idnc
