// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <variant>

#include <Eigen/Dense>

namespace tia {

using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Four labeled vertices with nonzero volume. Only constructible through
/// validation, so every instance is a usable element.
class Tetrahedron {
public:
  /// Relative degeneracy threshold: |volume| must exceed this times h_K^3.
  static constexpr double kVolumeTolerance = 1e-14;

  static Tetrahedron from_vertices(const std::array<Point3, 4>& vertices,
                                   double volume_tolerance = kVolumeTolerance);

  [[nodiscard]] const std::array<Point3, 4>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const Point3& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }

  /// det[x2-x1, x3-x1, x4-x1] / 6.
  [[nodiscard]] double signed_volume() const noexcept;
  [[nodiscard]] double volume() const noexcept;

  /// Vertex indices of the facet opposite vertex `apex`, in ascending order.
  static std::array<int, 3> facet_indices(int apex);

private:
  explicit Tetrahedron(const std::array<Point3, 4>& v) : vertices_(v) {}
  std::array<Point3, 4> vertices_;
};

double signed_volume(const std::array<Point3, 4>& v) noexcept;

/// Checked constructor; throws DegenerateElement or NonFinite.
Tetrahedron validate_tetrahedron(const std::array<Point3, 4>& vertices);

/// x -> linear * x + translation
struct AffineMap {
  Mat3 linear = Mat3::Identity();
  Point3 translation = Point3::Zero();

  static AffineMap identity() { return {}; }

  [[nodiscard]] Point3 operator()(const Point3& x) const { return linear * x + translation; }
  /// Pointwise image; the result is revalidated.
  [[nodiscard]] Tetrahedron operator()(const Tetrahedron& k) const;
  [[nodiscard]] AffineMap inverse() const;
  [[nodiscard]] double determinant() const { return linear.determinant(); }
};

/// (f * g)(x) == f(g(x))
AffineMap operator*(const AffineMap& f, const AffineMap& g);

// Diagonal scalings used to squeeze reference elements.
struct Squeeze1 { double a, b; };                  // (x, a y, b z), 0 < a <= 1, b > 0
struct Squeeze2 { double alpha, beta, gamma; };    // (alpha x, beta y, gamma z), 0 < beta <= alpha
struct Similarity { double alpha; };               // alpha * x
using SqueezeKind = std::variant<Squeeze1, Squeeze2, Similarity>;

AffineMap make_squeeze(const SqueezeKind& kind);
inline AffineMap squeeze1(double a, double b) { return make_squeeze(Squeeze1{a, b}); }
inline AffineMap squeeze2(double alpha, double beta, double gamma) {
  return make_squeeze(Squeeze2{alpha, beta, gamma});
}
inline AffineMap similarity(double alpha) { return make_squeeze(Similarity{alpha}); }

/// (0,0,0), (1,0,0), (0,1,0), (0,0,1)
const Tetrahedron& reference_hat();
/// (0,0,0), (1,0,0), (1,1,0), (0,0,1)
const Tetrahedron& reference_tilde();

double diameter(const Tetrahedron& k);

struct SphereRadii {
  double rho;       // inscribed-sphere diameter
  double R_sphere;  // circumscribed-sphere radius
};
SphereRadii inradius_circumradius(const Tetrahedron& k);

Point3 circumcenter(const Tetrahedron& k);

/// Circumradius of the triangle pqr; throws CollinearPoints.
double facet_circumradius(const Point3& p, const Point3& q, const Point3& r);

double triangle_area(const Point3& p, const Point3& q, const Point3& r);

}  // namespace tia
