// SPDX-License-Identifier: Apache-2.0
#include "tia/sobolev.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "tia/errors.hpp"
#include "tia/quadrature.hpp"

namespace tia {

namespace {

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 40> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size()))
    raise(Errc::DegreeOverflow, "factorial argument out of table range");
  return table[static_cast<std::size_t>(n)];
}

void check_order(int m) {
  if (m < 0 || m > kMaxSeminormOrder) {
    std::ostringstream os;
    os << "derivative order " << m << " outside 0.." << kMaxSeminormOrder;
    raise(Errc::UnsupportedOrder, os.str());
  }
}

void check_p(double p) {
  if (!(p >= 1.0)) raise(Errc::ParameterOutOfRange, "seminorm exponent must satisfy p >= 1");
}

/// x = x1 + T xi maps K-hat onto K.
AffineMap reference_map(const Tetrahedron& k) {
  const auto& v = k.vertices();
  AffineMap f;
  f.linear.col(0) = v[1] - v[0];
  f.linear.col(1) = v[2] - v[0];
  f.linear.col(2) = v[3] - v[0];
  f.translation = v[0];
  return f;
}

double integrate_on_reference(const MultiPolynomial& q) {
  double sum = 0.0;
  for (const auto& [e, c] : q.terms()) sum += c * reference_monomial_integral(e);
  return sum;
}

int as_even_integer(double p) {
  if (p != std::floor(p) || p > 64) return 0;
  const int n = static_cast<int>(p);
  return n % 2 == 0 ? n : 0;
}

}  // namespace

bool SeminormSpec::has_exact_path() const noexcept { return as_even_integer(p) > 0; }

double reference_monomial_integral(const Exponent& e) {
  return factorial(e[0]) * factorial(e[1]) * factorial(e[2]) / factorial(total_degree(e) + 3);
}

double integrate_polynomial(const Tetrahedron& k, const MultiPolynomial& q) {
  const AffineMap f = reference_map(k);
  const MultiPolynomial pulled = compose_affine(q, f, kMaxIntegrationDegree);
  return std::abs(f.determinant()) * integrate_on_reference(pulled);
}

double seminorm_exact(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec) {
  check_order(spec.m);
  const int p = as_even_integer(spec.p);
  if (p == 0) raise(Errc::ParameterOutOfRange, "exact seminorm path needs an even integer p");
  const AffineMap f = reference_map(k);
  const double jac = std::abs(f.determinant());
  double sum = 0.0;
  for (const auto& delta : exponents_of_degree(spec.m)) {
    const MultiPolynomial d = differentiate(q, delta);
    if (d.is_zero()) continue;
    if (d.degree() * p > kMaxIntegrationDegree) {
      std::ostringstream os;
      os << "integrand degree " << d.degree() * p << " exceeds " << kMaxIntegrationDegree;
      raise(Errc::DegreeOverflow, os.str());
    }
    // (d o F)^p == d^p o F; raising after the pull-back keeps compositions cheap.
    const MultiPolynomial pulled = compose_affine(d, f, kMaxIntegrationDegree);
    sum += jac * integrate_on_reference(pow(pulled, p));
  }
  return std::pow(std::max(sum, 0.0), 1.0 / p);
}

double seminorm_numeric(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec,
                        const SeminormOptions& opts) {
  check_order(spec.m);
  check_p(spec.p);
  if (spec.is_infinite()) return seminorm_sup(k, q, spec.m, opts);

  std::vector<PolynomialEvaluator> derivs;
  for (const auto& delta : exponents_of_degree(spec.m)) {
    const MultiPolynomial d = differentiate(q, delta);
    if (!d.is_zero()) derivs.emplace_back(d);
  }
  if (derivs.empty()) return 0.0;

  const QuadratureRule& rule = rule_of_degree(opts.quad_degree);
  auto integrate_level = [&](int level) {
    double total = 0.0;
    for (const auto& cell : uniform_refinement(k.vertices(), level)) {
      Mat3 t;
      t.col(0) = cell[1] - cell[0];
      t.col(1) = cell[2] - cell[0];
      t.col(2) = cell[3] - cell[0];
      const double jac = std::abs(t.determinant());
      double cell_sum = 0.0;
      for (std::size_t qp = 0; qp < rule.points.size(); ++qp) {
        const Point3 x = cell[0] + t * rule.points[qp];
        double acc = 0.0;
        for (const auto& g : derivs) acc += std::pow(std::abs(g(x)), spec.p);
        cell_sum += rule.weights[qp] * acc;
      }
      total += jac * cell_sum;
    }
    return total;
  };

  double previous = integrate_level(0);
  double current = previous;
  for (int level = 1; level <= opts.max_refinement_levels; ++level) {
    current = integrate_level(level);
    if (std::abs(current - previous) <= opts.quad_rel_tol * std::abs(current)) break;
    previous = current;
  }
  return std::pow(current, 1.0 / spec.p);
}

double seminorm_sup(const Tetrahedron& k, const MultiPolynomial& q, int m,
                    const SeminormOptions& opts) {
  check_order(m);
  std::vector<PolynomialEvaluator> derivs;
  for (const auto& delta : exponents_of_degree(m)) {
    const MultiPolynomial d = differentiate(q, delta);
    if (!d.is_zero()) derivs.emplace_back(d);
  }
  if (derivs.empty()) return 0.0;
  const int n = std::max(1, opts.sup_points_per_edge - 1);
  const auto& v = k.vertices();
  double best = 0.0;
  for (int a1 = 0; a1 <= n; ++a1)
    for (int a2 = 0; a2 <= n - a1; ++a2)
      for (int a3 = 0; a3 <= n - a1 - a2; ++a3) {
        const int a4 = n - a1 - a2 - a3;
        const Point3 x = (a1 * v[0] + a2 * v[1] + a3 * v[2] + a4 * v[3]) / n;
        for (const auto& g : derivs) best = std::max(best, std::abs(g(x)));
      }
  return best;
}

double seminorm(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec,
                const SeminormOptions& opts) {
  check_order(spec.m);
  check_p(spec.p);
  if (spec.is_infinite()) return seminorm_sup(k, q, spec.m, opts);
  if (spec.has_exact_path()) {
    const int p = as_even_integer(spec.p);
    int worst = 0;
    for (const auto& delta : exponents_of_degree(spec.m))
      worst = std::max(worst, differentiate(q, delta).degree());
    if (worst * p <= kMaxIntegrationDegree) return seminorm_exact(k, q, spec);
  }
  return seminorm_numeric(k, q, spec, opts);
}

ScalingCheck scaling_identity_check(const MultiPolynomial& q, const Tetrahedron& k, double alpha,
                                    int order, double p, const SeminormOptions& opts) {
  if (!(alpha > 0)) raise(Errc::ParameterOutOfRange, "scaling factor must be positive");
  const SeminormSpec spec{order, p};
  ScalingCheck out{};
  out.lhs = seminorm(k, q, spec, opts);
  const MultiPolynomial pulled = compose_affine(q, similarity(alpha));
  const Tetrahedron shrunk = similarity(1.0 / alpha)(k);
  const double exponent = (p == kInfinity ? 0.0 : 3.0 / p) - order;
  out.rhs = std::pow(alpha, exponent) * seminorm(shrunk, pulled, spec, opts);
  return out;
}

std::optional<std::string> violated_p_clause(int k, int m, double p) {
  if (k < 1 || m < 0 || m > k) return "requires k >= 1 and 0 <= m <= k";
  if (std::isnan(p) || p < 1.0) return "requires 1 <= p <= inf";
  if (k - m == 0) {
    if (!(p > 2.0)) return "k - m = 0 requires p > 2";
    return std::nullopt;
  }
  if (k == 1 && m == 0) {
    if (!(p > 1.5)) return "k = 1, m = 0 requires p > 3/2";
    return std::nullopt;
  }
  return std::nullopt;  // k >= 2 and k - m >= 1: any p >= 1
}

bool validate_p(int k, int m, double p) { return !violated_p_clause(k, m, p).has_value(); }

}  // namespace tia
