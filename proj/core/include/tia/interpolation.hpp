// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <vector>

#include "tia/geometry.hpp"
#include "tia/polynomial.hpp"

namespace tia {

inline constexpr int kMaxInterpolationDegree = 6;

/// gamma = (a1, a2, a3, a4); gamma / k is a barycentric coordinate.
struct MultiIndex4 {
  std::array<int, 4> a{};

  [[nodiscard]] int order() const noexcept { return a[0] + a[1] + a[2] + a[3]; }
  friend auto operator<=>(const MultiIndex4&, const MultiIndex4&) = default;
};

using Barycentric = std::array<double, 4>;

struct LatticePoint {
  MultiIndex4 index;
  Point3 point;
  Barycentric barycentric{};
};

/// All |gamma| == k, lexicographically ascending on (a1, a2, a3, a4).
std::vector<MultiIndex4> lattice_indices(int k);

/// C(k+3, 3) principal-lattice points, ordered as lattice_indices(k).
std::vector<LatticePoint> lattice_points(const Tetrahedron& k, int degree);

/// N_gamma(lambda) = prod_i prod_{l < a_i} (k lambda_i - l) / (a_i - l)
class LagrangeBasisFunction {
public:
  LagrangeBasisFunction(int k, const MultiIndex4& gamma);
  [[nodiscard]] double operator()(const Barycentric& lambda) const;
  [[nodiscard]] const MultiIndex4& index() const noexcept { return gamma_; }
  [[nodiscard]] int degree() const noexcept { return k_; }

private:
  int k_;
  MultiIndex4 gamma_;
};

/// Throws IndexOrderMismatch when |gamma| != k.
LagrangeBasisFunction lagrange_basis(int k, const MultiIndex4& gamma);

/// Barycentric coordinates of x as affine polynomials lambda_1..lambda_4.
/// Throws IllConditioned when the vertex matrix is numerically singular.
std::array<MultiPolynomial, 4> barycentric_polynomials(const Tetrahedron& k);

Barycentric barycentric_coordinates(const Tetrahedron& k, const Point3& x);

/// Lagrange basis functions as Cartesian polynomials, ordered as
/// lattice_indices(degree).
std::vector<MultiPolynomial> lagrange_basis_polynomials(const Tetrahedron& k, int degree);

using NodalValues = std::map<MultiIndex4, double>;

/// Lagrange interpolant of degree k in Cartesian monomials. Throws
/// MissingNode if any lattice index lacks a value.
MultiPolynomial interpolate(const Tetrahedron& k, int degree, const NodalValues& values);

/// Convenience: samples v at the lattice and interpolates.
MultiPolynomial interpolate(const Tetrahedron& k, int degree, const MultiPolynomial& v);

}  // namespace tia
