// SPDX-License-Identifier: Apache-2.0
#include "tia/standard_position.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "tia/errors.hpp"

namespace tia {

namespace {

bool lex_less(const Point3& a, const Point3& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

std::array<double, 3> sorted_eigenvalues(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::array<double, 3> out{ev(0), ev(1), ev(2)};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double StandardPosition::s_bold_1() const { return std::abs(s1); }

double StandardPosition::s_bold_2() const { return std::hypot(s21, s22); }

double StandardPosition::eta() const {
  return case_tag == PositionCase::i ? beta * s1 : alpha - beta * s1;
}

std::array<Point3, 4> StandardPosition::vertices() const {
  return {Point3(0, 0, 0), Point3(alpha, 0, 0), Point3(eta(), xi(), 0),
          Point3(gamma * s21, gamma * s22, gamma * t2)};
}

StandardPosition make_standard_position(double alpha, double beta, double gamma, double s1,
                                        double s21, double s22, PositionCase c) {
  const double tol = 1e-12 * alpha;
  if (!(alpha > 0 && beta > 0 && beta <= alpha + tol && gamma > 0))
    raise(Errc::ParameterOutOfRange, "standard position requires 0 < beta <= alpha, gamma > 0");
  if (!(s1 >= 0 && s1 < 1 && beta * s1 <= alpha / 2 + tol))
    raise(Errc::ParameterOutOfRange, "standard position requires 0 <= s1 < 1, beta s1 <= alpha/2");
  const double n2 = s21 * s21 + s22 * s22;
  if (!(n2 < 1 && gamma * s21 <= alpha / 2 + tol))
    raise(Errc::ParameterOutOfRange,
          "standard position requires s21^2 + s22^2 < 1, gamma s21 <= alpha/2");
  StandardPosition sp;
  sp.alpha = alpha;
  sp.beta = beta;
  sp.gamma = gamma;
  sp.s1 = s1;
  sp.t1 = std::sqrt(1.0 - s1 * s1);
  sp.s21 = s21;
  sp.s22 = s22;
  sp.t2 = std::sqrt(1.0 - n2);
  sp.case_tag = c;
  return sp;
}

StandardPosition standard_position(const Tetrahedron& k, int apex) {
  const auto base = Tetrahedron::facet_indices(apex);
  const auto& v = k.vertices();
  auto at = [&v](int i) -> const Point3& { return v[static_cast<std::size_t>(i)]; };

  // Longest base edge; exact ties go to the lexicographically smallest
  // (sorted) endpoint pair.
  struct Edge {
    int lo, hi, other;
    double length;
  };
  std::array<Edge, 3> edges{};
  const std::array<std::array<int, 3>, 3> combos{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (std::size_t e = 0; e < 3; ++e) {
    int a = base[static_cast<std::size_t>(combos[e][0])];
    int b = base[static_cast<std::size_t>(combos[e][1])];
    if (lex_less(at(b), at(a))) std::swap(a, b);
    edges[e] = {a, b, base[static_cast<std::size_t>(combos[e][2])], (at(a) - at(b)).norm()};
  }
  const Edge* best = &edges[0];
  for (std::size_t e = 1; e < 3; ++e) {
    const Edge& c = edges[e];
    if (c.length > best->length) {
      best = &c;
    } else if (c.length == best->length) {
      const bool smaller = lex_less(at(c.lo), at(best->lo)) ||
                           (at(c.lo) == at(best->lo) && lex_less(at(c.hi), at(best->hi)));
      if (smaller) best = &c;
    }
  }

  int i1 = best->lo, i2 = best->hi, i3 = best->other;
  const double alpha = best->length;
  if (!(alpha > 0)) raise(Errc::DegenerateElement, "base edge has zero length");

  Point3 e1 = (at(i2) - at(i1)) / alpha;
  const Point3 d = at(i3) - at(i1);
  Point3 e2 = d - d.dot(e1) * e1;
  const double e2n = e2.norm();
  if (!(e2n > 1e-14 * alpha)) raise(Errc::DegenerateElement, "base facet is collinear");
  e2 /= e2n;
  Point3 e3 = e1.cross(e2);
  if ((at(apex) - at(i1)).dot(e3) < 0) e3 = -e3;  // reflection z -> -z

  Point3 origin = at(i1);
  if ((at(apex) - origin).dot(e1) > alpha / 2) {
    // x -> alpha - x, relabel x1 <-> x2.
    std::swap(i1, i2);
    origin = at(i1);
    e1 = -e1;
  }

  StandardPosition sp;
  sp.motion.linear.row(0) = e1.transpose();
  sp.motion.linear.row(1) = e2.transpose();
  sp.motion.linear.row(2) = e3.transpose();
  sp.motion.translation = -sp.motion.linear * origin;
  sp.labels = {i1, i2, i3, apex};
  sp.alpha = alpha;

  const Point3 x3 = sp.motion(at(i3));
  const Point3 x4 = sp.motion(at(apex));
  if (x3.x() <= alpha / 2) {
    sp.case_tag = PositionCase::i;
    sp.beta = std::hypot(x3.x(), x3.y());
    sp.s1 = x3.x() / sp.beta;
  } else {
    sp.case_tag = PositionCase::ii;
    sp.beta = std::hypot(alpha - x3.x(), x3.y());
    sp.s1 = (alpha - x3.x()) / sp.beta;
  }
  sp.t1 = x3.y() / sp.beta;

  sp.gamma = x4.norm();
  sp.s21 = x4.x() / sp.gamma;
  sp.s22 = x4.y() / sp.gamma;
  sp.t2 = x4.z() / sp.gamma;
  if (!(sp.t2 > 0 && sp.t1 > 0)) raise(Errc::DegenerateElement, "apex lies in the base plane");
  return sp;
}

const Tetrahedron& MatrixFactorization::reference() const {
  return case_tag == PositionCase::i ? reference_hat() : reference_tilde();
}

MatrixFactorization matrix_factorization(const StandardPosition& sp) {
  const double s1 = sp.case_tag == PositionCase::i ? sp.s1 : -sp.s1;
  MatrixFactorization f;
  f.case_tag = sp.case_tag;
  f.A << 1, s1, sp.s21,
         0, sp.t1, sp.s22,
         0, 0, sp.t2;
  f.X << 1, 0, sp.s21,
         0, 1, sp.s22,
         0, 0, sp.t2;
  f.Y << 1, s1, 0,
         0, sp.t1, 0,
         0, 0, 1;
  f.G = Eigen::Vector3d(sp.alpha, sp.beta, sp.gamma).asDiagonal();
  f.eigenvalues_XtX = sorted_eigenvalues(f.X.transpose() * f.X);
  f.eigenvalues_YtY = sorted_eigenvalues(f.Y.transpose() * f.Y);
  return f;
}

}  // namespace tia
