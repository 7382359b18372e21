// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "tia/geometry.hpp"
#include "tia/standard_position.hpp"

namespace tia {

/// Image of a standard-position tetrahedron under "rotate about z by theta,
/// then project onto the xz-plane". The base collapses onto the segment
/// [x_lo, x_hi] of the x-axis; the apex lands at (apex_x, apex_z).
struct ProjectedTriangle {
  double x_lo = 0;
  double x_hi = 0;
  double apex_x = 0;  // gamma * w(theta)
  double apex_z = 0;  // gamma * t2
  double theta = 0;
};

/// w(theta) = s21 cos(theta) - s22 sin(theta)
double projected_apex_direction(const StandardPosition& sp, double theta);

ProjectedTriangle project_theta(const StandardPosition& sp, double theta);

/// Circumradius of the projected triangle; throws DegenerateProjection.
double r_theta(const ProjectedTriangle& pt);

struct RpOptions {
  int grid_points = 2048;
  double rel_tol = 1e-10;
};

struct RpResult {
  double R_P;
  double theta_at_max;
};

/// max of r_theta over theta in [-pi/2, pi/2]: dense grid, then golden-section
/// refinement around the best sample. Never below any grid sample.
RpResult r_p(const StandardPosition& sp, const RpOptions& opts = {});

/// Circumradius of the base facet from the standard-position parameters.
double base_circumradius(const StandardPosition& sp);

struct FacetProjectionReport {
  int base_index = 0;  // apex vertex; the base is the facet opposite it
  double R_B = 0;
  double R_P = 0;
  double theta_at_max = 0;
  double ratio = 0;  // R_B * R_P / h_B
  double h_B = 0;
};

struct ProjectedCircumradius {
  double R_K = 0;
  std::array<FacetProjectionReport, 4> per_facet{};
};

ProjectedCircumradius projected_circumradius(const Tetrahedron& k, const RpOptions& opts = {});

/// Constants assembled from the lower-bound argument for a given phi.
struct ConstructiveConstants {
  double phi;
  double C1;      // sin(phi)
  double C3;      // min{C1, 1/4} min{1, C1} / (2 sqrt 2)
  double lemma_C; // 4 sqrt 2 / C3
};

inline constexpr double kDefaultPhi = 0.2;

/// Throws ParameterOutOfRange unless 0 < phi < pi/6 and
/// sin(2 phi) tan(2 phi) <= 1/6.
ConstructiveConstants constructive_constants(double phi = kDefaultPhi);

struct ThetaSelection {
  int case_id = 1;
  double theta = 0;
  double phi = 0;
  double C1 = 0;
  double apex_offset = 0;       // gamma w, must not exceed base_midpoint
  double base_midpoint = 0;     // (x_lo + x_hi) / 2
  double separation = 0;        // |x_lo - gamma w|, at least separation_bound
  double separation_bound = 0;  // C1 gamma |s2|
};

ThetaSelection select_theta(const StandardPosition& sp, double phi = kDefaultPhi);

struct LemmaCheck {
  double lhs;           // prod (1 - s_i)^(-1/2)
  double rhs_unscaled;  // R_B R_P / (h_B max{alpha, gamma})
};

/// Throws ParameterOutOfRange if either |s_i| reaches 1.
LemmaCheck lemma_geometric_check(const StandardPosition& sp, const RpOptions& opts = {});

}  // namespace tia
