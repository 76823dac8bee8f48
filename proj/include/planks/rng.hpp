#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "planks/geometry.hpp"

namespace planks {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for an independent substream. Estimators assign one stream per sample
/// block, so results do not depend on how blocks are spread over workers.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0xD1B54A32D192ED03ull));
}

/// mt19937_64 wrapper that draws doubles from raw engine output only, so the
/// stream is identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal (Marsaglia polar, spare cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline Vec3 sample_unit_sphere(Rng& rng) {
    while (true) {
        const Vec3 g{rng.normal(), rng.normal(), rng.normal()};
        const double n = norm(g);
        if (n > 1e-12) return g * (1.0 / n);
    }
}

/// Uniform in the unit ball: uniform direction scaled by cbrt of a uniform.
inline Vec3 sample_unit_ball(Rng& rng) {
    return sample_unit_sphere(rng) * std::cbrt(rng.uniform());
}

/// Uniform on the polar cap of angular radius `cap_angle` around +z.
inline Vec3 sample_polar_cap(Rng& rng, double cap_angle) {
    const double z = 1.0 - rng.uniform() * (1.0 - std::cos(cap_angle));
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * rng.uniform();
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace planks
