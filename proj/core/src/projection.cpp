// SPDX-License-Identifier: Apache-2.0
#include "tia/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tia/errors.hpp"
#include "tia/golden_section.hpp"

namespace tia {

double projected_apex_direction(const StandardPosition& sp, double theta) {
  return sp.s21 * std::cos(theta) - sp.s22 * std::sin(theta);
}

ProjectedTriangle project_theta(const StandardPosition& sp, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // x-coordinates of x1, x2, x3 after rotation; y is dropped by the projection.
  const double p1 = 0.0;
  const double p2 = sp.alpha * c;
  const double p3 = sp.eta() * c - sp.xi() * s;
  ProjectedTriangle pt;
  pt.x_lo = std::min({p1, p2, p3});
  pt.x_hi = std::max({p1, p2, p3});
  pt.apex_x = sp.gamma * projected_apex_direction(sp, theta);
  pt.apex_z = sp.gamma * sp.t2;
  pt.theta = theta;
  return pt;
}

double r_theta(const ProjectedTriangle& pt) {
  const double width = pt.x_hi - pt.x_lo;
  const double scale = std::max({width, std::abs(pt.x_lo), std::abs(pt.x_hi),
                                 std::abs(pt.apex_x), std::abs(pt.apex_z)});
  if (!(pt.apex_z > 1e-13 * scale) || !(width > 1e-13 * scale))
    raise(Errc::DegenerateProjection, "projected triangle has (nearly) zero height or width");
  const double z2 = pt.apex_z * pt.apex_z;
  const double a = pt.x_hi - pt.apex_x;
  const double b = pt.x_lo - pt.apex_x;
  return std::sqrt(a * a + z2) * std::sqrt(b * b + z2) / (2.0 * pt.apex_z);
}

RpResult r_p(const StandardPosition& sp, const RpOptions& opts) {
  if (opts.grid_points < 3) raise(Errc::ParameterOutOfRange, "R_P grid needs at least 3 points");
  constexpr double half_pi = std::numbers::pi / 2;
  const int n = opts.grid_points;
  const double step = std::numbers::pi / (n - 1);
  auto theta_at = [&](int i) { return i == n - 1 ? half_pi : -half_pi + i * step; };
  auto f = [&sp](double theta) { return r_theta(project_theta(sp, theta)); };

  int best = 0;
  double best_value = f(theta_at(0));
  for (int i = 1; i < n; ++i) {
    const double v = f(theta_at(i));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = theta_at(std::max(best - 1, 0));
  const double hi = theta_at(std::min(best + 1, n - 1));
  const ScalarMax refined = golden_section_maximize(f, lo, hi, opts.rel_tol);
  if (refined.value > best_value) return {refined.value, refined.x};
  return {best_value, theta_at(best)};
}

double base_circumradius(const StandardPosition& sp) {
  const double a = sp.alpha;
  const double b = sp.beta;
  return std::sqrt(a * a - 2.0 * a * b * sp.s1 + b * b) / (2.0 * sp.t1);
}

ProjectedCircumradius projected_circumradius(const Tetrahedron& k, const RpOptions& opts) {
  ProjectedCircumradius out;
  out.R_K = std::numeric_limits<double>::infinity();
  for (int apex = 0; apex < 4; ++apex) {
    const StandardPosition sp = standard_position(k, apex);
    const auto f = Tetrahedron::facet_indices(apex);
    FacetProjectionReport& r = out.per_facet[static_cast<std::size_t>(apex)];
    r.base_index = apex;
    r.R_B = facet_circumradius(k.vertex(f[0]), k.vertex(f[1]), k.vertex(f[2]));
    const RpResult rp = r_p(sp, opts);
    r.R_P = rp.R_P;
    r.theta_at_max = rp.theta_at_max;
    r.h_B = sp.h_B();
    r.ratio = r.R_B * r.R_P / r.h_B;
    out.R_K = std::min(out.R_K, r.ratio);
  }
  return out;
}

ConstructiveConstants constructive_constants(double phi) {
  if (!(phi > 0 && phi < std::numbers::pi / 6 &&
        std::sin(2 * phi) * std::tan(2 * phi) <= 1.0 / 6.0))
    raise(Errc::ParameterOutOfRange,
          "phi must satisfy 0 < phi < pi/6 and sin(2 phi) tan(2 phi) <= 1/6");
  ConstructiveConstants c{};
  c.phi = phi;
  c.C1 = std::sin(phi);
  c.C3 = std::min(c.C1, 0.25) * std::min(1.0, c.C1) / (2.0 * std::numbers::sqrt2);
  c.lemma_C = 4.0 * std::numbers::sqrt2 / c.C3;
  return c;
}

ThetaSelection select_theta(const StandardPosition& sp, double phi) {
  const ConstructiveConstants c = constructive_constants(phi);
  ThetaSelection sel;
  sel.phi = phi;
  sel.C1 = c.C1;
  if (std::abs(sp.s22) * std::tan(phi) <= std::abs(sp.s21)) {
    sel.case_id = 1;
    sel.theta = 0.0;
  } else if (3.0 * sp.gamma * sp.s22 * std::tan(2 * phi) <= sp.alpha) {
    sel.case_id = 2;
    sel.theta = -2.0 * phi;
  } else {
    sel.case_id = 3;
    sel.theta = 2.0 * phi;
  }
  const ProjectedTriangle pt = project_theta(sp, sel.theta);
  sel.apex_offset = pt.apex_x;
  sel.base_midpoint = 0.5 * (pt.x_lo + pt.x_hi);
  sel.separation = std::abs(pt.x_lo - pt.apex_x);
  sel.separation_bound = c.C1 * sp.gamma * sp.s_bold_2();
  return sel;
}

LemmaCheck lemma_geometric_check(const StandardPosition& sp, const RpOptions& opts) {
  const double s1 = sp.s_bold_1();
  const double s2 = sp.s_bold_2();
  if (!(s1 < 1.0 && s2 < 1.0))
    raise(Errc::ParameterOutOfRange, "lemma check requires |s1| < 1 and |s2| < 1");
  LemmaCheck out{};
  out.lhs = 1.0 / std::sqrt((1.0 - s1) * (1.0 - s2));
  const double R_B = base_circumradius(sp);
  const double R_P = r_p(sp, opts).R_P;
  out.rhs_unscaled = R_B * R_P / (sp.h_B() * std::max(sp.alpha, sp.gamma));
  return out;
}

}  // namespace tia
