#pragma once

// Seeded RNG used everywhere randomness is needed. std::normal_distribution
// has an unspecified algorithm, so the Gaussian draw is an explicit
// Box-Muller on top of mt19937_64: results are reproducible byte-exact for a
// fixed seed on a given platform. One engine per call site, never shared.

#include <cmath>
#include <cstdint>
#include <random>

#include "triq/types.hpp"

namespace triq {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform on (0, 1].
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t integer() { return eng_(); }

    // Standard normal via Box-Muller; the spare draw is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * kPi * u2;
        spare_ = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

    cplx complex_normal() {
        double re = normal();
        double im = normal();
        return cplx(re, im);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace triq
