// SPDX-License-Identifier: Apache-2.0
#include "test_util.hpp"
#include "tia/polynomial.hpp"
#include "tia/random.hpp"

using namespace tia;

namespace {
MultiPolynomial x() { return MultiPolynomial::variable(0); }
MultiPolynomial y() { return MultiPolynomial::variable(1); }
MultiPolynomial z() { return MultiPolynomial::variable(2); }
}  // namespace

TEST(Exponents, CountsAndOrder) {
  EXPECT_EQ(exponents_of_degree(0).size(), 1u);
  EXPECT_EQ(exponents_of_degree(2).size(), 6u);
  EXPECT_EQ(exponents_of_degree(4).size(), 15u);
  EXPECT_EQ(exponents_up_to_degree(3).size(), 20u);
  EXPECT_EQ(exponents_of_degree(3).front(), (Exponent{3, 0, 0}));
  EXPECT_EQ(exponents_of_degree(3).back(), (Exponent{0, 0, 3}));
}

TEST(MultiPolynomial, ArithmeticAndZeros) {
  const MultiPolynomial p = x() * x() + 2.0 * y() - 2.0 * y();
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), 0);
  EXPECT_DOUBLE_EQ((x() * y() + z())(Point3(2, 3, 4)), 10.0);
  EXPECT_DOUBLE_EQ(pow(x() + y(), 3).coefficient({1, 2, 0}), 3.0);
}

TEST(MultiPolynomial, Pruning) {
  const MultiPolynomial p = x() + MultiPolynomial::constant(1e-20);
  EXPECT_EQ(p.pruned().terms().size(), 1u);
  EXPECT_EQ(p.terms().size(), 2u);
}

TEST(Differentiate, Examples) {
  EXPECT_EQ(differentiate(x() * x(), {2, 0, 0}), MultiPolynomial::constant(2));
  EXPECT_TRUE(differentiate(x() * x() + y() * y(), {1, 1, 0}).is_zero());
  EXPECT_EQ(differentiate(x() * z() * pow(y(), 3), {1, 0, 1}), pow(y(), 3));
  EXPECT_EQ(differentiate(pow(x(), 4), {3, 0, 0}), 24.0 * x());
}

TEST(ComposeAffine, Examples) {
  EXPECT_EQ(compose_affine(x(), squeeze1(0.5, 3)), x());
  EXPECT_EQ(compose_affine(z() * z(), squeeze1(1, 3)), 9.0 * z() * z());
  const MultiPolynomial s = x() + y() + z();
  const MultiPolynomial lhs = compose_affine(pow(s, 3), similarity(2));
  // oracle: repeated multiplication of the scaled linear form
  const MultiPolynomial scaled = 2.0 * s;
  EXPECT_LE(max_coefficient_difference(lhs, scaled * scaled * scaled), 1e-12);
  EXPECT_LE(max_coefficient_difference(lhs, 8.0 * pow(s, 3)), 1e-12);
}

TEST(ComposeAffine, MatchesPointwiseEvaluation) {
  Rng rng(7);
  MultiPolynomial q;
  for (const auto& e : exponents_up_to_degree(4)) q += MultiPolynomial::monomial(e, rng.uniform(-1, 1));
  Mat3 m;
  for (int i = 0; i < 9; ++i) m.data()[i] = rng.uniform(-1, 1);
  const AffineMap f{m, rng.uniform_point(-1, 1)};
  const MultiPolynomial c = compose_affine(q, f);
  for (int i = 0; i < 50; ++i) {
    const Point3 p = rng.uniform_point(-1, 1);
    EXPECT_NEAR(c(p), q(f(p)), 1e-12);
  }
}

TEST(ComposeAffine, DegreeOverflow) {
  EXPECT_RAISES(compose_affine(pow(x(), 13), similarity(2)), Errc::DegreeOverflow);
  EXPECT_NO_THROW(compose_affine(pow(x(), 13), similarity(2), 13));
}

TEST(PolynomialEvaluator, AgreesWithDirectEvaluation) {
  Rng rng(9);
  MultiPolynomial q;
  for (const auto& e : exponents_up_to_degree(5)) q += MultiPolynomial::monomial(e, rng.uniform(-1, 1));
  const PolynomialEvaluator ev(q);
  for (int i = 0; i < 100; ++i) {
    const Point3 p = rng.uniform_point(-2, 2);
    EXPECT_NEAR(ev(p), q(p), 1e-12 * std::max(1.0, std::abs(q(p))));
  }
}
