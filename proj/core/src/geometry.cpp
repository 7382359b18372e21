// SPDX-License-Identifier: Apache-2.0
#include "tia/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "tia/errors.hpp"

namespace tia {

namespace {

double max_pairwise_distance(const std::array<Point3, 4>& v) {
  double h = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) h = std::max(h, (v[i] - v[j]).norm());
  return h;
}

}  // namespace

double signed_volume(const std::array<Point3, 4>& v) noexcept {
  Mat3 edges;
  edges.col(0) = v[1] - v[0];
  edges.col(1) = v[2] - v[0];
  edges.col(2) = v[3] - v[0];
  return edges.determinant() / 6.0;
}

Tetrahedron Tetrahedron::from_vertices(const std::array<Point3, 4>& vertices,
                                       double volume_tolerance) {
  for (const auto& p : vertices) {
    if (!p.allFinite()) raise(Errc::NonFinite, "vertex coordinates must be finite");
  }
  const double h = max_pairwise_distance(vertices);
  const double vol = std::abs(tia::signed_volume(vertices));
  if (!(vol > volume_tolerance * h * h * h)) {
    std::ostringstream os;
    os << "volume " << vol << " is below " << volume_tolerance << " * h_K^3 (h_K = " << h << ")";
    raise(Errc::DegenerateElement, os.str());
  }
  return Tetrahedron(vertices);
}

double Tetrahedron::signed_volume() const noexcept { return tia::signed_volume(vertices_); }

double Tetrahedron::volume() const noexcept { return std::abs(signed_volume()); }

std::array<int, 3> Tetrahedron::facet_indices(int apex) {
  if (apex < 0 || apex > 3) raise(Errc::ParameterOutOfRange, "facet index must be in 0..3");
  std::array<int, 3> out{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != apex) out[static_cast<std::size_t>(n++)] = i;
  return out;
}

Tetrahedron validate_tetrahedron(const std::array<Point3, 4>& vertices) {
  return Tetrahedron::from_vertices(vertices);
}

Tetrahedron AffineMap::operator()(const Tetrahedron& k) const {
  std::array<Point3, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = (*this)(k.vertices()[i]);
  return Tetrahedron::from_vertices(v);
}

AffineMap AffineMap::inverse() const {
  Eigen::FullPivLU<Mat3> lu(linear);
  if (!lu.isInvertible()) raise(Errc::IllConditioned, "affine map is not invertible");
  AffineMap inv;
  inv.linear = lu.inverse();
  inv.translation = -inv.linear * translation;
  return inv;
}

AffineMap operator*(const AffineMap& f, const AffineMap& g) {
  AffineMap out;
  out.linear = f.linear * g.linear;
  out.translation = f.linear * g.translation + f.translation;
  return out;
}

AffineMap make_squeeze(const SqueezeKind& kind) {
  AffineMap m;
  std::visit(
      [&m](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Squeeze1>) {
          if (!(s.a > 0.0 && s.a <= 1.0 && s.b > 0.0))
            raise(Errc::ParameterOutOfRange, "sq1 requires 0 < a <= 1 and b > 0");
          m.linear = Eigen::Vector3d(1.0, s.a, s.b).asDiagonal();
        } else if constexpr (std::is_same_v<T, Squeeze2>) {
          if (!(s.beta > 0.0 && s.beta <= s.alpha && s.gamma > 0.0))
            raise(Errc::ParameterOutOfRange, "sq2 requires 0 < beta <= alpha and gamma > 0");
          m.linear = Eigen::Vector3d(s.alpha, s.beta, s.gamma).asDiagonal();
        } else {
          if (!(s.alpha > 0.0)) raise(Errc::ParameterOutOfRange, "similarity requires alpha > 0");
          m.linear = Mat3::Identity() * s.alpha;
        }
      },
      kind);
  return m;
}

const Tetrahedron& reference_hat() {
  static const Tetrahedron k = Tetrahedron::from_vertices(
      {Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)});
  return k;
}

const Tetrahedron& reference_tilde() {
  static const Tetrahedron k = Tetrahedron::from_vertices(
      {Point3(0, 0, 0), Point3(1, 0, 0), Point3(1, 1, 0), Point3(0, 0, 1)});
  return k;
}

double diameter(const Tetrahedron& k) { return max_pairwise_distance(k.vertices()); }

Point3 circumcenter(const Tetrahedron& k) {
  // 2 (x_i - x_0) . c = |x_i|^2 - |x_0|^2, solved relative to x_0.
  const auto& v = k.vertices();
  Mat3 a;
  Point3 rhs;
  for (int i = 0; i < 3; ++i) {
    const Point3 d = v[static_cast<std::size_t>(i + 1)] - v[0];
    a.row(i) = 2.0 * d.transpose();
    rhs(i) = d.squaredNorm();
  }
  return v[0] + a.fullPivLu().solve(rhs);
}

SphereRadii inradius_circumradius(const Tetrahedron& k) {
  const auto& v = k.vertices();
  double area = 0.0;
  for (int apex = 0; apex < 4; ++apex) {
    const auto f = Tetrahedron::facet_indices(apex);
    area += triangle_area(v[static_cast<std::size_t>(f[0])], v[static_cast<std::size_t>(f[1])],
                          v[static_cast<std::size_t>(f[2])]);
  }
  const double inradius = 3.0 * k.volume() / area;
  const double R = (circumcenter(k) - v[0]).norm();
  return {2.0 * inradius, R};
}

double triangle_area(const Point3& p, const Point3& q, const Point3& r) {
  return 0.5 * (q - p).cross(r - p).norm();
}

double facet_circumradius(const Point3& p, const Point3& q, const Point3& r) {
  const double a = (q - p).norm();
  const double b = (r - q).norm();
  const double c = (p - r).norm();
  const double area = triangle_area(p, q, r);
  const double longest = std::max({a, b, c});
  if (!(area > 1e-14 * longest * longest))
    raise(Errc::CollinearPoints, "triangle vertices are (nearly) collinear");
  return a * b * c / (4.0 * area);
}

}  // namespace tia
