#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "dpp/errors.hpp"

namespace dpp {

// Seeded generator with hand-rolled distribution mappings. std::mt19937_64 is
// fully specified by the standard; the std:: distributions are not, so mapping
// raw bits to reals/normals/poisson ourselves keeps every seeded run
// reproducible bit-for-bit regardless of standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n) via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ArgumentError("Rng::below: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    // Standard normal via Box-Muller; uses (0,1] for the radial draw so the
    // log argument is never zero.
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Knuth's product-of-uniforms method; fine for the small means used here.
    int poisson(double mean) {
        if (mean < 0) throw ArgumentError("Rng::poisson: mean must be non-negative");
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    // Deterministic child seed for a named stream (per-video generators etc).
    std::uint64_t derive(std::uint64_t stream) const {
        std::uint64_t z = seed_mix_ + stream * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static Rng child(std::uint64_t seed, std::uint64_t stream) {
        Rng base(seed);
        base.seed_mix_ = seed;
        return Rng(base.derive(stream));
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_mix_ = 0;
};

}  // namespace dpp
