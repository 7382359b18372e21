// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "tia/quadrature.hpp"
#include "tia/random.hpp"
#include "tia/sobolev.hpp"

using namespace tia;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

MultiPolynomial random_poly(Rng& rng, int degree) {
  MultiPolynomial q;
  for (const auto& e : exponents_up_to_degree(degree)) q += MultiPolynomial::monomial(e, rng.uniform(-1, 1));
  return q;
}

}  // namespace

TEST(Quadrature, GaussLegendreIntegratesPolynomials) {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(5, x, w);
  for (int d = 0; d <= 9; ++d) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], d);
    EXPECT_NEAR(s, 1.0 / (d + 1), 1e-14);
  }
}

TEST(Quadrature, ConicalRuleExactness) {
  for (int n = 2; n <= 8; ++n) {
    const QuadratureRule r = conical_product_rule(n);
    double wsum = 0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 1.0 / 6.0, 1e-15);
    for (const auto& e : exponents_up_to_degree(r.exact_degree)) {
      double s = 0;
      for (std::size_t i = 0; i < r.points.size(); ++i)
        s += r.weights[i] * std::pow(r.points[i].x(), e[0]) * std::pow(r.points[i].y(), e[1]) *
             std::pow(r.points[i].z(), e[2]);
      EXPECT_NEAR(s, reference_monomial_integral(e), 1e-14);
    }
  }
}

TEST(Quadrature, RefinementPreservesVolume) {
  const TetVertices t{Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)};
  const auto kids = uniform_refinement(t, 2);
  ASSERT_EQ(kids.size(), 64u);
  double vol = 0;
  for (const auto& c : kids) vol += std::abs(signed_volume(c));
  EXPECT_NEAR(vol, 1.0 / 6.0, 1e-15);
}

TEST(Integration, MonomialOracle) {
  // int_{K-hat} x^a y^b z^c = a! b! c! / (a+b+c+3)!
  for (const auto& e : exponents_up_to_degree(6)) {
    const double expect = factorial(e[0]) * factorial(e[1]) * factorial(e[2]) / factorial(total_degree(e) + 3);
    EXPECT_NEAR(reference_monomial_integral(e), expect, 1e-16);
    EXPECT_NEAR(integrate_polynomial(reference_hat(), MultiPolynomial::monomial(e)), expect, 1e-15);
  }
  // unit cube corner scaled by 2: volume 8/6
  EXPECT_NEAR(integrate_polynomial(similarity(2)(reference_hat()), MultiPolynomial::constant(1)), 8.0 / 6.0,
              1e-14);
}

TEST(Seminorm, QuadraticOracle) {
  const MultiPolynomial q = MultiPolynomial::monomial({2, 0, 0}) + MultiPolynomial::monomial({0, 2, 0}) +
                            MultiPolynomial::monomial({0, 0, 2});
  // three second derivatives equal to 2 on a domain of volume 1/6
  EXPECT_NEAR(seminorm(reference_hat(), q, {2, 2.0}), std::numbers::sqrt2, 1e-10);
  EXPECT_NEAR(seminorm(reference_hat(), q, {2, kInfinity}), 2.0, 1e-12);
  EXPECT_NEAR(seminorm(reference_hat(), q, {0, 1.0}), 1.0 / 20.0, 1e-9);
}

TEST(Seminorm, ExactAgreesWithNumeric) {
  Rng rng(59);
  for (int n = 0; n < 10; ++n) {
    const Tetrahedron k = random_tetrahedron(rng, 0.01);
    const MultiPolynomial q = random_poly(rng, 3);
    for (int m = 0; m <= 2; ++m) {
      const double exact = seminorm_exact(k, q, {m, 2.0});
      const double numeric = seminorm_numeric(k, q, {m, 2.0});
      EXPECT_NEAR(numeric, exact, 1e-8 * std::max(exact, 1e-12));
    }
  }
}

TEST(Seminorm, SupIsLowerBoundAndClose) {
  // |x + y + z| reaches its maximum 1 on the slanted facet
  const MultiPolynomial q = MultiPolynomial::affine(0, Point3(1, 1, 1));
  EXPECT_NEAR(seminorm_sup(reference_hat(), q, 0), 1.0, 1e-12);
  const MultiPolynomial cubic = MultiPolynomial::monomial({1, 1, 1});
  const double s = seminorm_sup(reference_hat(), cubic, 0);
  EXPECT_LE(s, 1.0 / 27.0 + 1e-15);
  // the maximiser (1/3, 1/3, 1/3) is not a grid point
  EXPECT_NEAR(s, 1.0 / 27.0, 5e-3 / 27.0);
}

TEST(Seminorm, ScalingIdentity) {
  Rng rng(61);
  for (int n = 0; n < 20; ++n) {
    const Tetrahedron k = random_tetrahedron(rng);
    const MultiPolynomial q = random_poly(rng, 3);
    const double alpha = rng.uniform(0.2, 5);
    for (int order = 0; order <= 3; ++order) {
      for (double p : {2.0, 4.0}) {
        const ScalingCheck c = scaling_identity_check(q, k, alpha, order, p);
        EXPECT_NEAR(c.lhs, c.rhs, 1e-10 * std::max(c.lhs, 1e-300));
      }
      const ScalingCheck ci = scaling_identity_check(q, k, alpha, order, kInfinity);
      EXPECT_NEAR(ci.lhs, ci.rhs, 1e-3 * ci.lhs + 1e-300);
    }
  }
}

TEST(Seminorm, GeneralExponentUsesQuadrature) {
  const MultiPolynomial q = MultiPolynomial::variable(0);
  // |x|_{0,3} over K-hat: (int x^3)^(1/3) = (1/120)^(1/3)
  EXPECT_NEAR(seminorm(reference_hat(), q, {0, 3.0}), std::cbrt(1.0 / 120.0), 1e-9);
  // int x^1.5 = Gamma(2.5) / Gamma(5.5)
  const double expect = std::pow(1.0 / (4.5 * 3.5 * 2.5), 1 / 1.5);
  EXPECT_NEAR(seminorm(reference_hat(), q, {0, 1.5}), expect, 1e-6 * expect);
}

TEST(Seminorm, Errors) {
  const MultiPolynomial q = MultiPolynomial::variable(0);
  EXPECT_RAISES(seminorm(reference_hat(), q, {13, 2.0}), Errc::UnsupportedOrder);
  EXPECT_RAISES(seminorm(reference_hat(), q, {-1, 2.0}), Errc::UnsupportedOrder);
  EXPECT_RAISES(seminorm(reference_hat(), q, {0, 0.5}), Errc::ParameterOutOfRange);
}

TEST(ValidateP, ConditionTable) {
  const double ps[] = {1.0, 1.5, 1.6, 2.0, 2.1, 3.0, kInfinity};
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= k; ++m)
      for (double p : ps) {
        bool expect = true;
        if (k == m) expect = p > 2;
        if (k == 1 && m == 0) expect = p > 1.5;
        EXPECT_EQ(validate_p(k, m, p), expect) << k << " " << m << " " << p;
      }
  EXPECT_EQ(*violated_p_clause(1, 1, 2.0), "k - m = 0 requires p > 2");
  EXPECT_EQ(*violated_p_clause(1, 0, 1.5), "k = 1, m = 0 requires p > 3/2");
  EXPECT_FALSE(validate_p(2, 3, 2.0));
}
