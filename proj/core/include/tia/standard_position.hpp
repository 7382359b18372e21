// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "tia/geometry.hpp"

namespace tia {

/// (i): third base vertex and apex on the same side of the bisecting plane
/// of the longest base edge; (ii): opposite sides.
enum class PositionCase { i, ii };

/// Canonical parameterization of a tetrahedron after a rigid motion (plus at
/// most a reflection in effect):
///
///   x1 = (0,0,0), x2 = (alpha,0,0), x4 = gamma (s21, s22, t2),
///   x3 = (beta s1, beta t1, 0)          case i
///   x3 = (alpha - beta s1, beta t1, 0)  case ii
///
/// with 0 < beta <= alpha, s1^2 + t1^2 = 1, s21^2 + s22^2 + t2^2 = 1,
/// t1, t2 > 0, beta s1 <= alpha/2 and gamma s21 <= alpha/2.
struct StandardPosition {
  double alpha = 0, beta = 0, gamma = 0;
  double s1 = 0, t1 = 0;
  double s21 = 0, s22 = 0, t2 = 0;
  PositionCase case_tag = PositionCase::i;
  /// Maps the input vertices onto the standard coordinates.
  AffineMap motion;
  /// labels[j] is the input vertex index that became x_{j+1}.
  std::array<int, 4> labels{0, 1, 2, 3};

  [[nodiscard]] double s_bold_1() const;  // |s1|
  [[nodiscard]] double s_bold_2() const;  // sqrt(s21^2 + s22^2)
  [[nodiscard]] double h_B() const { return alpha; }

  /// Vertices x1..x4 in standard coordinates.
  [[nodiscard]] std::array<Point3, 4> vertices() const;
  /// x3 = (eta, xi, 0)
  [[nodiscard]] double eta() const;
  [[nodiscard]] double xi() const { return beta * t1; }
};

/// Builds a StandardPosition directly from parameters (no motion). Throws
/// ParameterOutOfRange when the constraints above are violated beyond 1e-12.
StandardPosition make_standard_position(double alpha, double beta, double gamma, double s1,
                                        double s21, double s22, PositionCase c);

/// `apex` is the vertex that becomes x4; the facet opposite it is the base.
StandardPosition standard_position(const Tetrahedron& k, int apex);

/// A = X Y with A the upper-triangular matrix that maps G(reference) onto
/// the standard position, G = diag(alpha, beta, gamma).
struct MatrixFactorization {
  Mat3 A;
  Mat3 X;
  Mat3 Y;
  Mat3 G;
  std::array<double, 3> eigenvalues_XtX{};  // ascending
  std::array<double, 3> eigenvalues_YtY{};  // ascending
  PositionCase case_tag = PositionCase::i;

  /// K-hat for case i, K-tilde for case ii.
  [[nodiscard]] const Tetrahedron& reference() const;
};

MatrixFactorization matrix_factorization(const StandardPosition& sp);

}  // namespace tia
