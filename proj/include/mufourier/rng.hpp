#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mufourier/measure.hpp"

// Deterministic random helpers.  std::uniform_real_distribution and
// std::normal_distribution are implementation-defined, so everything here
// derives from raw mt19937_64 words to keep outputs reproducible across
// standard libraries.

namespace mufourier {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }
    // Uniform in (0, 1].
    double uniform_pos() {
        return double((engine_() >> 11) + 1) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
        // inclusive range; modulo bias is irrelevant for test-scale spans
        return lo + engine_() % (hi - lo + 1);
    }
    double normal() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) *
               std::cos(2.0 * std::numbers::pi * v);
    }
    Complex normal_complex() { return {normal(), normal()}; }

private:
    std::mt19937_64 engine_;
};

}  // namespace mufourier
