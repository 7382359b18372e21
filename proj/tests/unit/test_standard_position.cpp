// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "test_util.hpp"
#include "tia/random.hpp"
#include "tia/standard_position.hpp"

using namespace tia;

TEST(StandardPosition, ReferenceHatBaseOppositeOrigin) {
  // Apex (0,0,0); base {(1,0,0),(0,1,0),(0,0,1)} is equilateral with edge sqrt 2.
  const StandardPosition sp = standard_position(reference_hat(), 0);
  EXPECT_NEAR(sp.alpha, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(sp.beta, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(sp.s1, 0.5, 1e-15);
  EXPECT_EQ(sp.case_tag, PositionCase::i);
  EXPECT_NEAR(sp.gamma, 1.0, 1e-15);
}

TEST(StandardPosition, RoundTripAndConstraints) {
  Rng rng(17);
  for (int n = 0; n < 1000; ++n) {
    const Tetrahedron k = random_tetrahedron(rng);
    for (int apex = 0; apex < 4; ++apex) {
      const StandardPosition sp = standard_position(k, apex);
      const auto v = sp.vertices();
      const AffineMap back = sp.motion.inverse();
      for (std::size_t j = 0; j < 4; ++j)
        ASSERT_LE((back(v[j]) - k.vertex(sp.labels[j])).norm(), 1e-10 * diameter(k));
      const double tol = 1e-12 * sp.alpha;
      EXPECT_LE(sp.beta, sp.alpha + tol);
      EXPECT_LE(sp.beta * sp.s1, sp.alpha / 2 + tol);
      EXPECT_LE(sp.gamma * sp.s21, sp.alpha / 2 + tol);
      EXPECT_GT(sp.t1, 0);
      EXPECT_GT(sp.t2, 0);
      EXPECT_NEAR(sp.s21 * sp.s21 + sp.s22 * sp.s22 + sp.t2 * sp.t2, 1.0, 1e-12);
      EXPECT_EQ(sp.labels[3], apex);
      // the motion is rigid (possibly a reflection)
      EXPECT_NEAR(std::abs(sp.motion.determinant()), 1.0, 1e-12);
    }
  }
}

TEST(StandardPosition, CaseTwoWhenThirdVertexPastMidpoint) {
  const Tetrahedron k = test::tet({Point3(0, 0, 0), Point3(4, 0, 0), Point3(3, 1, 0), Point3(1, 1, 2)});
  const StandardPosition sp = standard_position(k, 3);
  EXPECT_EQ(sp.case_tag, PositionCase::ii);
  EXPECT_NEAR(sp.alpha, 4.0, 1e-15);
  EXPECT_NEAR(sp.beta, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(sp.eta(), 3.0, 1e-14);
}

TEST(StandardPosition, ApexPastMidpointIsMirrored) {
  const Tetrahedron k = test::tet({Point3(0, 0, 0), Point3(4, 0, 0), Point3(1, 1, 0), Point3(3, 1, 2)});
  const StandardPosition sp = standard_position(k, 3);
  EXPECT_LE(sp.gamma * sp.s21, sp.alpha / 2);
  EXPECT_EQ(sp.labels[0], 1);
  EXPECT_EQ(sp.case_tag, PositionCase::ii);
}

TEST(StandardPosition, AcceptsZeroS1) {
  const StandardPosition sp = make_standard_position(2, 1, 1, 0, 0.2, 0.3, PositionCase::i);
  EXPECT_DOUBLE_EQ(sp.t1, 1.0);
  EXPECT_TRUE(sp.vertices()[2].isApprox(Point3(0, 1, 0)));
}

TEST(StandardPosition, MakeValidatesParameters) {
  EXPECT_RAISES(make_standard_position(1, 2, 1, 0.1, 0, 0, PositionCase::i), Errc::ParameterOutOfRange);
  EXPECT_RAISES(make_standard_position(1, 1, 1, 0.9, 0, 0, PositionCase::i), Errc::ParameterOutOfRange);
  EXPECT_RAISES(make_standard_position(1, 1, 1, 0.1, 0.8, 0.8, PositionCase::i), Errc::ParameterOutOfRange);
  EXPECT_RAISES(make_standard_position(1, 1, 2, 0.1, 0.3, 0, PositionCase::i), Errc::ParameterOutOfRange);
}

TEST(MatrixFactorization, RightCornerIsIdentity) {
  const StandardPosition sp = make_standard_position(1, 1, 1, 0, 0, 0, PositionCase::i);
  const MatrixFactorization f = matrix_factorization(sp);
  EXPECT_TRUE(f.X.isIdentity(1e-15));
  EXPECT_TRUE(f.Y.isIdentity(1e-15));
  for (double e : f.eigenvalues_XtX) EXPECT_NEAR(e, 1.0, 1e-15);
}

TEST(MatrixFactorization, RegularTetrahedronEigenvalues) {
  const StandardPosition sp = standard_position(test::regular_tetrahedron(), 3);
  EXPECT_NEAR(sp.s_bold_2(), 1.0 / std::sqrt(3.0), 1e-14);
  const MatrixFactorization f = matrix_factorization(sp);
  EXPECT_NEAR(f.eigenvalues_XtX[0], 1.0 - 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(f.eigenvalues_XtX[1], 1.0, 1e-12);
  EXPECT_NEAR(f.eigenvalues_XtX[2], 1.0 + 1.0 / std::sqrt(3.0), 1e-12);
}

TEST(MatrixFactorization, MapsScaledReferenceOntoStandardPosition) {
  Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    const Tetrahedron k = random_tetrahedron(rng);
    const StandardPosition sp = standard_position(k, n % 4);
    const MatrixFactorization f = matrix_factorization(sp);
    const auto target = sp.vertices();
    const auto& ref = f.reference().vertices();
    for (std::size_t j = 0; j < 4; ++j) {
      const Point3 image = f.A * f.G * ref[j];
      EXPECT_LE((image - target[j]).norm(), 1e-12 * sp.alpha);
    }
    EXPECT_LE((f.A - f.X * f.Y).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(f.A.determinant(), sp.t1 * sp.t2, 1e-12);
  }
}
