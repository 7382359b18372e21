// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "tia/geometry.hpp"

namespace tia {

/// Points and weights on the reference tetrahedron K-hat; weights sum to 1/6.
struct QuadratureRule {
  std::vector<Point3> points;
  std::vector<double> weights;
  int exact_degree = 0;
};

/// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Collapsed (conical product) Gauss rule with n points per direction,
/// exact for total degree 2n - 3.
QuadratureRule conical_product_rule(int n);

/// Smallest conical rule exact for the requested degree.
const QuadratureRule& rule_of_degree(int degree);

using TetVertices = std::array<Point3, 4>;

/// 8^levels congruent-volume children via edge-midpoint subdivision.
std::vector<TetVertices> uniform_refinement(const TetVertices& tet, int levels);

}  // namespace tia
