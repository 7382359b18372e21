// SPDX-License-Identifier: Apache-2.0
#include "tia/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "tia/errors.hpp"

namespace tia {

Tetrahedron random_tetrahedron(Rng& rng, double min_volume, double lo, double hi) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::array<Point3, 4> v;
    for (auto& p : v) p = rng.uniform_point(lo, hi);
    if (std::abs(signed_volume(v)) > min_volume) return Tetrahedron::from_vertices(v);
  }
  raise(Errc::Internal, "rejection sampling for a random tetrahedron did not terminate");
}

Mat3 random_rotation(Rng& rng) {
  // Shoemake's uniform quaternion.
  const double u1 = rng.uniform();
  const double u2 = rng.uniform() * 2.0 * std::numbers::pi;
  const double u3 = rng.uniform() * 2.0 * std::numbers::pi;
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  const Eigen::Quaterniond q(a * std::sin(u2), a * std::cos(u2), b * std::sin(u3),
                             b * std::cos(u3));
  return q.normalized().toRotationMatrix();
}

}  // namespace tia
