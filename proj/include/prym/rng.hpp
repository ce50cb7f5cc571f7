#pragma once

#include <cstdint>
#include <random>

#include "prym/numerics.hpp"

namespace prym {

/// Deterministic seeded generator. mt19937_64 output is fixed by the
/// standard; the [0,1) mapping below avoids the implementation-defined
/// std::uniform_real_distribution, so sequences are identical across
/// platforms and runs.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Area-uniform draw from the annulus r_min <= |z| <= r_max.
    Complex annulus(double r_min, double r_max) {
        double r2 = uniform(r_min * r_min, r_max * r_max);
        double theta = 6.283185307179586476925286766559 * uniform01();
        double r = std::sqrt(r2);
        return {r * std::cos(theta), r * std::sin(theta)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace prym
