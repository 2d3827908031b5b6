#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace electoral {

// All simulation randomness flows through this wrapper.  mt19937_64 has a
// bit-exact output sequence fixed by the C++ standard; the uniform and
// normal transforms are written out explicitly because the standard-library
// distribution adaptors are allowed to differ between implementations.
// Identical seeds therefore reproduce identical electorates on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform in [0, 1) built from the top 53 bits of one engine draw.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // One Box-Muller pair of independent standard normals.  Consumes exactly
    // two uniforms; u1 is flipped into (0, 1] so log never sees zero.
    std::pair<double, double> gaussian_pair() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * kPi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 engine_;
};

}  // namespace electoral
