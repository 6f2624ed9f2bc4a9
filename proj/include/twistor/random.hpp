#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "twistor/gaussian.hpp"

namespace twistor {

// Seeded source of bounded-height rationals. All randomized operations take
// one of these (or a seed) explicitly, so results are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed)), engine_(state_) {}

    // Independent child stream, e.g. one per multistart. Depends only on the
    // construction seed and the stream id, not on draws made so far.
    Rng derive(std::uint64_t stream) const { return Rng(state_ ^ mix(stream ^ 0x5851f42d4c957f2dULL)); }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    // n/d with |n| <= height, 1 <= d <= height.
    mpq_class rational(std::int64_t height) {
        std::int64_t n = integer(-height, height);
        std::int64_t d = integer(1, height);
        mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
        q.canonicalize();
        return q;
    }

    GaussianRational gaussian(std::int64_t height) {
        mpq_class re = rational(height);
        mpq_class im = rational(height);
        return {re, im};
    }

    GaussianRational nonzero_gaussian(std::int64_t height) {
        for (;;) {
            GaussianRational z = gaussian(height);
            if (!z.is_zero()) return z;
        }
    }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    Complex complex_normal() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
    std::mt19937_64 engine_;
};

}  // namespace twistor
