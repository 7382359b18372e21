// SPDX-License-Identifier: Apache-2.0
#include "tia/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "tia/errors.hpp"

namespace tia {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) raise(Errc::ParameterOutOfRange, "Gauss-Legendre needs n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // map [-1, 1] -> [0, 1]
    nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
    weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

QuadratureRule conical_product_rule(int n) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  QuadratureRule rule;
  rule.exact_degree = 2 * n - 3;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double u = x[static_cast<std::size_t>(a)];
        const double v = x[static_cast<std::size_t>(b)];
        const double s = x[static_cast<std::size_t>(c)];
        rule.points.emplace_back(u, (1 - u) * v, (1 - u) * (1 - v) * s);
        rule.weights.push_back(w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)] *
                               w[static_cast<std::size_t>(c)] * (1 - u) * (1 - u) * (1 - v));
      }
  return rule;
}

const QuadratureRule& rule_of_degree(int degree) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  const int n = std::max(2, (degree + 4) / 2);
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, conical_product_rule(n)).first;
  return it->second;
}

std::vector<TetVertices> uniform_refinement(const TetVertices& tet, int levels) {
  std::vector<TetVertices> cells{tet};
  for (int level = 0; level < levels; ++level) {
    std::vector<TetVertices> next;
    next.reserve(cells.size() * 8);
    for (const auto& t : cells) {
      const Point3 &x0 = t[0], &x1 = t[1], &x2 = t[2], &x3 = t[3];
      const Point3 m01 = 0.5 * (x0 + x1), m02 = 0.5 * (x0 + x2), m03 = 0.5 * (x0 + x3);
      const Point3 m12 = 0.5 * (x1 + x2), m13 = 0.5 * (x1 + x3), m23 = 0.5 * (x2 + x3);
      next.push_back({x0, m01, m02, m03});
      next.push_back({m01, x1, m12, m13});
      next.push_back({m02, m12, x2, m23});
      next.push_back({m03, m13, m23, x3});
      next.push_back({m01, m02, m03, m13});
      next.push_back({m01, m02, m12, m13});
      next.push_back({m02, m03, m13, m23});
      next.push_back({m02, m12, m13, m23});
    }
    cells = std::move(next);
  }
  return cells;
}

}  // namespace tia
