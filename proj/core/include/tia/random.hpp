// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "tia/geometry.hpp"

namespace tia {

/// mt19937_64 with a fixed bits-to-double mapping, so streams are identical
/// across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Point3 uniform_point(double lo, double hi) {
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return {x, y, z};
  }

private:
  std::mt19937_64 engine_;
};

/// Uniform vertices in [lo, hi]^3, rejected until |volume| > min_volume.
Tetrahedron random_tetrahedron(Rng& rng, double min_volume = 1e-4, double lo = 0.0,
                               double hi = 1.0);

/// Haar-ish random rotation (uniform unit quaternion).
Mat3 random_rotation(Rng& rng);

}  // namespace tia
